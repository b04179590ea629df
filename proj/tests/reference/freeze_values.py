"""Reference values frozen into the unit tests, computed at 50 digits.

Run with `python3 freeze_values.py`; every number printed here appears verbatim
in one of the test files.
"""
from mpmath import mp, mpf, log, gamma, binomial, diff

mp.dps = 50


def mu(q, lam):
    """Divided difference of x^(q+N-1) over distinct nodes, high precision."""
    lam = [mpf(x) for x in lam if x != 0]
    n = len(lam)
    total = mpf(0)
    for i, li in enumerate(lam):
        den = mpf(1)
        for j, lj in enumerate(lam):
            if i != j:
                den *= li - lj
        total += li ** (q + n - 1) / den
    return total


def subentropy(lam):
    lam = [mpf(x) for x in lam if x != 0]
    n = len(lam)
    total = mpf(0)
    for i, li in enumerate(lam):
        den = mpf(1)
        for j, lj in enumerate(lam):
            if i != j:
                den *= li - lj
        total += li ** n * log(li) / den
    return -total


def mu_flat(q, n):
    return gamma(q + n) / (gamma(q + 1) * gamma(n)) * mpf(n) ** (-q)


def show(name, value):
    print(f"{name:40s} {mp.nstr(value, 20)}")


show("mu(1.5; .75,.25)", mu(mpf("1.5"), ["0.75", "0.25"]))
show("mu(2.5; flat3)", mu_flat(mpf("2.5"), 3))
show("mu(0.5; .5,.3,.2)", mu(mpf("0.5"), ["0.5", "0.3", "0.2"]))
show("mu(3.5; .4,.3,.2,.1)", mu(mpf("3.5"), ["0.4", "0.3", "0.2", "0.1"]))
# near-degenerate spectrum: two nodes 1e-6 apart
show("mu(0.5; .4+1e-6,.4,.2-1e-6)", mu(mpf("0.5"), [mpf("0.4") + mpf("1e-6"), mpf("0.4"), mpf("0.2") - mpf("1e-6")]))
show("mu(2.5; .3+2e-7,.3,.3-2e-7,.1)", mu(mpf("2.5"), [mpf("0.3") + mpf("2e-7"), mpf("0.3"), mpf("0.3") - mpf("2e-7"), mpf("0.1")]))
show("Q(.75,.25)", subentropy(["0.75", "0.25"]))
show("Q(.5,.3,.2)", subentropy(["0.5", "0.3", "0.2"]))
show("Q(.4+1e-6,.4,.2-1e-6)", subentropy([mpf("0.4") + mpf("1e-6"), mpf("0.4"), mpf("0.2") - mpf("1e-6")]))
show("Q(.01,.08,.27,.64)", subentropy(["0.01", "0.08", "0.27", "0.64"]))
show("Q(flat2) = ln2-1/2", log(2) - mpf(1) / 2)
show("Q(flat3) = ln3-5/6", log(3) - mpf(5) / 6)
show("c_nq(2,2) = ln 1.5", log(mpf("1.5")))
show("c_nq(3,0.5)", 1 / (1 - mpf("0.5")) * log(6 * gamma(mpf("1.5")) / gamma(mpf("3.5"))))
show("Q2(.75,.25) = -ln .8125", -log(mpf("0.8125")))
show("Q2(flat2) = ln 4/3", log(mpf(4) / 3))
show("S2(.75,.25) = -ln .625", -log(mpf("0.625")))
show("S_N(.75,.25)", -(mpf("0.75") * log(mpf("0.75")) + mpf("0.25") * log(mpf("0.25"))))
show("S_W,2 bi (.75,.25)", -log(mpf("0.8125") * 4 / 9))
show("Q_10(flat2)", log(mpf(1024) / 11) / 9)
show("Q_0.5(.75,.25)", 2 * log(mu(mpf("0.5"), ["0.75", "0.25"])))
show("M_0.5(.75,.25)", 2 * (mu(mpf("0.5"), ["0.75", "0.25"]) - 1))
# Wehrl entropy from the moment derivative, independent of the closed form
m = lambda q: 2 * gamma(q + 1) / gamma(q + 2) * mu(q, ["0.75", "0.25"])
show("-dm/dq at 1 (mono, .75,.25)", -diff(m, 1))
show("Q(.75,.25) + C2", subentropy(["0.75", "0.25"]) + mpf(1) / 2)
