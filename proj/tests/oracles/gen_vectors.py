#!/usr/bin/env python3
"""Independent reference values frozen into the C++ unit tests.

Everything here is computed with plain Python integers / hashlib and shares no
code with the library.
"""
import hashlib
import struct


def shake_words(seed: bytes, count: int):
    out = hashlib.shake_256(seed).digest(4 * count)
    return list(struct.unpack("<%dI" % count, out))


def alg1(n, omega, words, reverse):
    """Plain transcription of the support-form sampler, with OR-accumulated
    duplicate detection against the already-resolved entries."""
    support = [0] * omega
    for i in range(omega):
        w = words[omega - 1 - i] if reverse else words[i]
        support[i] = i + w % (n - i)
    for i in range(omega - 1, -1, -1):
        found = any(support[i] == support[j] for j in range(i + 1, omega))
        if found:
            support[i] = i
    return support


def alg2(n, omega, words):
    v = set()
    support = [0] * omega
    k = 0
    for i in range(omega - 1, -1, -1):
        s = i + words[k] % (n - i)
        k += 1
        if s in v:
            v.add(i)
            support[i] = i
        else:
            v.add(s)
            support[i] = s
    return support, sorted(v)


def ring_mul(n, h_bits, y, acc_bits):
    out = set(acc_bits)
    for a in h_bits:
        for c in y:
            e = (a + c) % n
            out ^= {e}
    return sorted(out)


if __name__ == "__main__":
    seed = bytes(range(40))
    print("shake256(0..39) words[0..4] =", [hex(x) for x in shake_words(seed, 4)])
    print("shake256(zero40) word0 =", hex(shake_words(bytes(40), 1)[0]))
    print("shake256(0..39) words[0..35] =", shake_words(seed, 35))
    print("(2^32-1) % 17669 =", (2**32 - 1) % 17669)
    print("123456789 % 17595 =", 123456789 % 17595)
    print("floor(2^32/17595) =", 2**32 // 17595)
    print("floor(2^32/17669) =", 2**32 // 17669)
    diffs = {2**32 // m - 2**32 // (m + 1) for m in range(17595, 17669)}
    print("adjacent diffs n=17669 w=75:", diffs)
    # correction bits (step i -> i-1): R(i-1) = R(i) - 14 + c[i]
    n, w = 17669, 75
    R = [2**32 // (n - i) for i in range(w)]
    corr = [0] + [R[i - 1] - R[i] + 14 for i in range(1, w)]
    print("corrections:", "".join(map(str, corr)))
    print("alg1 n=10 w=2 words [0,8] ->", alg1(10, 2, [0, 8], False))
    print("alg1 n=10 w=2 words [4,3] ->", alg1(10, 2, [4, 3], False))
    print("alg1rev n=10 w=2 words [3,4] ->", alg1(10, 2, [3, 4], True))
    print("alg2 n=10 w=3 words [0,1,2] ->", alg2(10, 3, [0, 1, 2]))
    print("alg1rev n=10 w=3 words [0,1,2] ->", alg1(10, 3, [0, 1, 2], True))
    print("ring n=7 (x^3+x+1)*{2,5} + x^6 ->", ring_mul(7, [0, 1, 3], [2, 5], [6]))
