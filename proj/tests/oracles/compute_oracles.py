"""High-precision reference values frozen into the C++ tests.

Independent of the library: everything here uses mpmath at 250 digits (x**k underflows 50-digit precision for k=7).
Run: python3 tests/oracles/compute_oracles.py
"""
from fractions import Fraction
from itertools import product

import mpmath as mp

mp.mp.dps = 250


def h(x):
    x = mp.mpf(x)
    if x == 0 or x == 1:
        return mp.mpf(0)
    return -x * mp.log(x) - (1 - x) * mp.log(1 - x)


def q(k, x):
    k, x = mp.mpf(k), mp.mpf(x)
    return x ** (k - 1) * h(x) / h(x ** k)


def u(x):
    x = mp.mpf(x)
    return mp.log(x) * mp.log(1 - x) / h(x)


def bisect(f, lo, hi, steps=400):
    lo, hi = mp.mpf(lo), mp.mpf(hi)
    for _ in range(steps):
        mid = (lo + hi) / 2
        if f(mid) < 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def alpha(k):
    k = mp.mpf(k)
    return bisect(lambda a: a * (1 + a) ** (k - 1) - 1, 0, 1)


def eqpoint(k):
    k = mp.mpf(k)
    return bisect(lambda x: x ** k + x - 1, 0, 1)


def defect(k, a, x):
    k, x = mp.mpf(k), mp.mpf(x)
    return a * h(x ** k) - x ** (k - 1) * h(x)


def show(label, v):
    print(f"{label:40s} {mp.nstr(v, 20)}")


show("h(0.25)", h(0.25))
show("h'(0.2)=log4", mp.log(0.8) - mp.log(0.2))
show("q(3,1e-4)", q(3, mp.mpf("1e-4")))
for k in (2, 3, 7):
    for j in range(3, 11):
        x = mp.mpf(10) ** (-j)
        show(f"|q({k},1e-{j})-1/{k}|", abs(q(k, x) - mp.mpf(1) / k))
show("u(1e-8)", u(mp.mpf("1e-8")))
show("log_mean(4,2)", 2 / mp.log(2))
for k in (1.01, 1.1, 1.5, 2, 2.5, 3, 4, 5, 5.5, 7, 7.5, 10, 20, 100):
    a = alpha(k)
    show(f"alpha({k})", a)
    show(f"  eqpoint({k})", eqpoint(k))
    show(f"  threshold({k})", a / (1 + a))
a2 = alpha(2)
show("defect(2,a2,0.3)", defect(2, a2, mp.mpf("0.3")))
xs = [mp.mpf("0.25") + i * mp.mpf("0.1") / 1000 for i in range(1001)]
show("min D(2) on [0.25,0.35]", min(defect(2, a2, x) for x in xs))
show("bound(k=2,eps=.1,|F|=16)", a2 / (1 + a2) - (2 * mp.mpf("0.1") + 2 * mp.mpf("0.1") * mp.log(10) / mp.log(16)))
a3 = alpha(3)
show("threshold3", a3 / (1 + a3))
a11 = alpha(1.1)
show("alpha(1.1) mid gap", (1 / mp.mpf(1.1) + a11) / 2)
for x in (mp.mpf("1e-3"), mp.mpf("1e-6"), mp.mpf("1e-12")):
    show(f"q(1.1,{x})", q(1.1, x))
    show(f"q(1.1,1-{x})", q(1.1, 1 - x))
show("0.3^2.5", mp.mpf("0.3") ** 2.5)
show("0.4^2.5", mp.mpf("0.4") ** 2.5)
show("h(0.1)", h(mp.mpf("0.1")))
show("h(0.2)", h(mp.mpf("0.2")))

# Union-closed families over [3]: minimum of the max element frequency.
best = None
for enc in range(2, 1 << 8):
    fam = [m for m in range(8) if enc >> m & 1]
    s = set(fam)
    if any((a | b) not in s for a in fam for b in fam):
        continue
    f = max(Fraction(sum(1 for m in fam if m >> i & 1), len(fam)) for i in range(3))
    best = f if best is None else min(best, f)
print("union-closed [3] min max_freq", best)

# closure fraction of {0, {1}, {2}} at k=2 by enumeration.
fam = [0, 1, 2]
good = sum(1 for t in product(fam, repeat=2) if (t[0] | t[1]) in fam)
print("c({{},{1},{2}},k=2)", Fraction(good, 9))
