#!/usr/bin/env python3
# Normalization rewrites any machine into pop-or-push-one form without
# changing its language. Check that claim exhaustively on short words.

import itertools

from pumpkit import Accepted, accepts, corpus_get, is_star_form, normalize

pal = corpus_get("GEN_PAL")
npda = normalize(pal.pda)

print(f"{pal.name}: {pal.description}")
print(f"  original:   {len(pal.pda.states)} states, {len(pal.pda.transitions)} transitions,"
      f" star form = {is_star_form(pal.pda)}")
print(f"  normalized: {len(npda.states)} states, {len(npda.transitions)} transitions,"
      f" star form = {is_star_form(npda)}")
print()

agree = members = 0
for length in range(0, 7):
    for letters in itertools.product(sorted(pal.pda.input_alphabet), repeat=length):
        word = "".join(letters)
        before = isinstance(accepts(pal.pda, word), Accepted)
        after = isinstance(accepts(npda, word), Accepted)
        assert before == after, word
        agree += 1
        members += before

print(f"all {agree} words of length <= 6 agree; {members} are palindromes")
