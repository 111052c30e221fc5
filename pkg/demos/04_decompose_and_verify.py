#!/usr/bin/env python3
# Decompose an accepted word into u v x y z, pump it, and verify by two
# routes that share no code: splicing the run vs. fresh membership search.

from pumpkit import (
    ExtractionMode,
    ascii_chart,
    corpus_get,
    decomposition_annotations,
    extract,
    pumped_word,
    verify_by_replay,
    verify_by_search,
)

dyck = corpus_get("DYCK1")
word = "(((())))"
res = extract(dyck.pda, word, mode=ExtractionMode.BEST_EFFORT)
d = res.decomposition

print(f"word {word!r} splits as ({d.case}):")
for part in "uvxyz":
    print(f"  {part} = {getattr(d, part)!r}")
w = d.witness
print(f"witness: heights g={w.g}, h={w.h} share a full state;"
      f" cuts at positions {w.lp_g}, {w.lp_h}, {w.fp_h}, {w.fp_g}")
print()

for n in range(4):
    pumped = pumped_word(d, n)
    replay = verify_by_replay(dyck.pda, res.path, d, n)
    search = verify_by_search(dyck.pda, d, n)
    print(f"  n={n}: {pumped!r:22s} replay={'ok' if replay else 'FAIL'} search={search}")
print()

markers, spans = decomposition_annotations(d, res.path)
print(ascii_chart(res.path.profile, markers, spans), end="")
