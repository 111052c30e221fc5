#!/usr/bin/env python3
# Pumping sizes for every built-in machine. p' bounds the stack depth a
# repeated "full state" needs; p is the word length past which a
# decomposition is guaranteed. p grows exponentially in p', so it gets
# astronomical the moment a machine has more than a handful of states.

from pumpkit import BUILTINS, normalize, pumping_params

for name in sorted(BUILTINS):
    entry = BUILTINS[name]
    npda = normalize(entry.pda)
    params = pumping_params(npda)
    p = str(params.p)
    if len(p) > 24:
        p = f"{p[:8]}...e{len(p) - 1:+d} ({len(p)} digits)"
    print(f"{name:8s} |A|={params.state_count:3d} |Gamma|={params.stack_symbol_count}"
          f"  p'={params.p_prime:5d}  p={p}")
