#!/usr/bin/env python3
# Run a word through the balanced-parentheses machine and draw its stack.

from pumpkit import ascii_chart, corpus_get, minimal_accepting_path

dyck = corpus_get("DYCK1")
word = "(((())))"
path = minimal_accepting_path(dyck.pda, word)

print(f"{word!r} accepted in {len(path.steps)} steps")
print()
for pos in range(len(path.profile)):
    stack = "".join(path.stack_at(pos)) or "(empty)"
    print(f"  after {pos:2d} steps: state={path.state_at(pos)}  stack={stack}")
print()
print(ascii_chart(path.profile), end="")
