"""Independent high-precision values frozen into the C++ tests."""
import mpmath as mp

mp.mp.dps = 40


def ball_vol(m):
    return mp.pi ** (mp.mpf(m) / 2) / mp.gamma(mp.mpf(m) / 2 + 1)


def vol_states(d):
    # sqrt(d) (2 pi)^{d(d-1)/2} Gamma(1)...Gamma(d) / Gamma(d^2)
    prod = mp.mpf(1)
    for k in range(1, d + 1):
        prod *= mp.gamma(k)
    return mp.sqrt(d) * (2 * mp.pi) ** (mp.mpf(d * (d - 1)) / 2) * prod / mp.gamma(d * d)


def vrad(vol, m):
    return (vol / ball_vol(m)) ** (mp.mpf(1) / m)


def bmk(m, k):
    return (ball_vol(m) / (ball_vol(k) * ball_vol(m - k))) ** (mp.mpf(1) / m)


def section(v, r, big_r, m, k):
    b = bmk(m, k)
    e = mp.mpf(m - k) / m
    lo = (v * big_r ** (-e) * b) ** (mp.mpf(m) / k)
    hi = (v * r ** (-e) * b * mp.binomial(m, k) ** (mp.mpf(1) / m)) ** (mp.mpf(m) / k)
    return lo, hi


def show(name, x):
    print(f"{name} = {mp.nstr(x, 17)}")


show("vol_states(2)", vol_states(2))
show("pi*sqrt(2)/3", mp.pi * mp.sqrt(2) / 3)
for d in (2, 4, 9, 16, 25):
    show(f"vrad_states({d})", vrad(vol_states(d), d * d - 1))
    show(f"sqrt(d)*vrad_states({d})", mp.sqrt(d) * vrad(vol_states(d), d * d - 1))
show("vrad_cp_base(2)", 2 * vrad(vol_states(4), 15))
show("vrad_cp_base(3)", 3 * vrad(vol_states(9), 80))
show("vrad_from_vol(8,3)", vrad(8, 3))
show("bmk(3,2)", bmk(3, 2))
show("bmk(2,1)", bmk(2, 1))
show("bmk(15,12)", bmk(15, 12))
lo, hi = section(vrad(8, 3), 1, mp.sqrt(3), 3, 2)
show("cube section lo", lo)
show("cube section hi", hi)
show("cube section exact", vrad(4, 2))
lo, hi = section(2 * vrad(vol_states(4), 15), 1 / mp.sqrt(3), mp.sqrt(3), 15, 12)
show("cp tp section lo", lo)
show("cp tp section hi", hi)
show("santalo cube", vrad(8, 3) * vrad(mp.mpf(4) / 3, 3))
show("tni lo", (mp.e * 2 ** mp.mpf(2.5)) ** -4)
show("tni hi", mp.mpf(2) ** -2)
show("exp(-1/4)", mp.e ** (-mp.mpf(1) / 4))
