"""Finite field towers F_{q^n} built directly over the prime field.

Each extension F_{p^m} is represented as F_p[x]/(m(x)) with m(x) the
lexicographically least monic irreducible of degree m (coefficient tuples
ordered constant-first, i.e. candidates are enumerated as base-p integers
k -> x^m + poly(k)).  Elements are encoded as integers 0..p^m-1 whose
base-p digits are the polynomial coefficients, constant digit least
significant.

Multiplication goes through discrete log/exp tables when the field is
small enough to tabulate, which is the regime brute-force point counting
lives in anyway.
"""

from functools import lru_cache

TABLE_LIMIT = 1 << 22  # build log/exp tables up to this field size


def _poly_mul_mod(a, b, modulus, p):
    """Multiply coefficient lists over F_p modulo the monic modulus."""
    deg = len(modulus) - 1
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = (out[i + j] + ai * bj) % p
    # reduce modulo modulus (monic)
    for k in range(len(out) - 1, deg - 1, -1):
        c = out[k]
        if c:
            out[k] = 0
            for i in range(deg):
                out[k - deg + i] = (out[k - deg + i] - c * modulus[i]) % p
    out = out[:deg]
    while len(out) < deg:
        out.append(0)
    return out


def _poly_pow_mod(base, exponent, modulus, p):
    deg = len(modulus) - 1
    result = [1] + [0] * (deg - 1)
    base = list(base[:deg]) + [0] * max(0, deg - len(base))
    while exponent:
        if exponent & 1:
            result = _poly_mul_mod(result, base, modulus, p)
        base = _poly_mul_mod(base, base, modulus, p)
        exponent >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = list(a), list(b)
    def trim(v):
        while v and v[-1] == 0:
            v.pop()
        return v
    a, b = trim(a), trim(b)
    while b:
        # a mod b
        inv_lead = pow(b[-1], p - 2, p)
        while len(a) >= len(b) and a:
            factor = a[-1] * inv_lead % p
            shift = len(a) - len(b)
            for i in range(len(b)):
                a[shift + i] = (a[shift + i] - factor * b[i]) % p
            a = trim(a)
        a, b = b, a
    return a


def _is_irreducible(coeffs, p):
    """Irreducibility of a monic polynomial over F_p: x^{p^m} = x mod f and
    gcd(x^{p^{m/l}} - x, f) trivial for every prime l dividing m."""
    m = len(coeffs) - 1
    if m == 1:
        return True
    x_red = [0, 1] + [0] * (m - 2)
    if _poly_pow_mod([0, 1], p**m, coeffs, p) != x_red:
        return False
    for l in _prime_factors(m):
        g = _poly_pow_mod([0, 1], p ** (m // l), coeffs, p)
        diff = [(a - b) % p for a, b in zip(g, x_red)]
        if len(_poly_gcd(diff, coeffs, p)) != 1:
            return False
    return True


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@lru_cache(maxsize=None)
def least_irreducible(p, m):
    """Lexicographically least monic irreducible of degree m over F_p,
    as a constant-first coefficient list of length m+1."""
    for k in range(p**m):
        coeffs = []
        kk = k
        for _ in range(m):
            coeffs.append(kk % p)
            kk //= p
        coeffs.append(1)
        if _is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found")  # cannot happen


class FiniteField:
    """F_{p^m} with elements encoded as integers 0..p^m - 1."""

    def __init__(self, p, m):
        if m < 1:
            raise ValueError("degree must be >= 1")
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = least_irreducible(p, m)
        self._exp = None
        self._log = None
        if self.q <= TABLE_LIMIT:
            self._build_tables()

    # --- encoding ---------------------------------------------------
    def encode(self, coeffs):
        val = 0
        for c in reversed(coeffs):
            val = val * self.p + (c % self.p)
        return val

    def decode(self, a):
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return out

    def from_int(self, n):
        """Image of an integer under Z -> F_p -> F_{p^m}."""
        return n % self.p

    # --- arithmetic ---------------------------------------------------
    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        pa, pb = self.decode(a), self.decode(b)
        return self.encode([(x + y) % self.p for x, y in zip(pa, pb)])

    def neg(self, a):
        if self.p == 2:
            return a
        return self.encode([(-x) % self.p for x in self.decode(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return self.encode(
            _poly_mul_mod(self.decode(a), self.decode(b), list(self.modulus), self.p)
        )

    def pow(self, a, e):
        if e == 0:
            return 1
        if a == 0:
            return 0
        if self._log is not None:
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        return self.encode(
            _poly_pow_mod(self.decode(a), e, list(self.modulus), self.p)
        )

    def inverse(self, a):
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.pow(a, self.q - 2)

    def elements(self):
        return range(self.q)

    # --- tables ---------------------------------------------------------
    def _find_generator(self):
        factors = _prime_factors(self.q - 1)
        for g in range(1, self.q):
            if all(
                self._slow_pow(g, (self.q - 1) // l) != 1 for l in factors
            ):
                return g
        raise AssertionError("no generator found")  # cannot happen

    def _slow_pow(self, a, e):
        return self.encode(_poly_pow_mod(self.decode(a), e, list(self.modulus), self.p))

    def _build_tables(self):
        g = self._find_generator()
        exp = [0] * (self.q - 1)
        log = [0] * self.q
        acc = 1
        modulus = list(self.modulus)
        gp = self.decode(g)
        for i in range(self.q - 1):
            exp[i] = acc
            log[acc] = i
            acc = self.encode(_poly_mul_mod(self.decode(acc), gp, modulus, self.p))
        self._exp = exp
        self._log = log


class FieldTower:
    """Tower of extensions F_{q^n} over the fixed base F_q, q = p^r."""

    def __init__(self, p, r=1):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        if r < 1:
            raise ValueError("r must be >= 1")
        self.p = p
        self.r = r
        self.q = p**r
        self._cache = {}

    def build_extension(self, n) -> FiniteField:
        """Field handle for F_{q^n} = F_{p^{rn}}."""
        if n < 1:
            raise ValueError("n must be >= 1")
        if n not in self._cache:
            self._cache[n] = FiniteField(self.p, self.r * n)
        return self._cache[n]
