#include "nullideal/integer.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>

#include "nullideal/errors.hpp"

namespace nullideal {

Integer mod_canonical(const Integer& a, const Integer& m) {
    if (m < 1) throw std::invalid_argument("mod_canonical: modulus must be >= 1, got " + m.get_str());
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer pow_integer(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

unsigned long bit_length(const Integer& x) {
    if (x == 0) return 0;
    return mpz_sizeinbase(x.get_mpz_t(), 2);
}

unsigned long Valuation::value() const {
    if (!v_.has_value()) throw std::logic_error("Valuation::value: infinite valuation has no finite value");
    return *v_;
}

bool operator<(const Valuation& a, const Valuation& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return a.value() < b.value();
}

std::string to_string(const Valuation& v) {
    return v.is_infinite() ? "inf" : std::to_string(v.value());
}

Valuation p_adic_valuation(const Integer& x, const Integer& p) {
    if (!is_prime(p)) throw std::invalid_argument("p_adic_valuation: p must be prime, got " + p.get_str());
    if (x == 0) return Valuation::infinity();
    Integer reduced;
    mp_bitcnt_t v = mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
    return Valuation::finite(static_cast<unsigned long>(v));
}

namespace {

// one strong probable-prime round for odd n = d * 2^s + 1
bool miller_rabin_round(const Integer& n, const Integer& d, unsigned long s, const Integer& base) {
    Integer a = mod_canonical(base, n);
    if (a == 0) return true;  // base divisible by n carries no information
    Integer x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned long r = 1; r < s; ++r) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

// strong Lucas probable-prime test with Selfridge parameters; n odd, > 2, not a perfect square
bool strong_lucas_round(const Integer& n) {
    // first D in 5, -7, 9, -11, ... with Jacobi(D, n) = -1
    Integer d = 5;
    while (true) {
        int j = mpz_jacobi(d.get_mpz_t(), n.get_mpz_t());
        if (j == -1) break;
        if (j == 0 && abs(d) != n) return false;  // proper factor found
        if (d > 0)
            d = -(d + 2);
        else
            d = -(d - 2);
    }
    // P = 1, Q = (1 - D) / 4
    Integer q = (1 - d) / 4;

    Integer delta = n + 1;
    unsigned long s = mpz_scan1(delta.get_mpz_t(), 0);
    Integer m = delta >> s;

    // compute U_m, V_m mod n by the binary double-and-add ladder
    Integer u = 1, v = 1, qk = mod_canonical(q, n);
    Integer two_inv;
    Integer two = 2;
    if (mpz_invert(two_inv.get_mpz_t(), two.get_mpz_t(), n.get_mpz_t()) == 0) return false;  // n even
    unsigned long bits = mpz_sizeinbase(m.get_mpz_t(), 2);
    for (long i = static_cast<long>(bits) - 2; i >= 0; --i) {
        // (U, V) <- (U*V, (V^2 + D*U^2)/2), Q^k doubling
        Integer u2 = mod_canonical(u * v, n);
        Integer v2 = mod_canonical((v * v + d * u * u) * two_inv, n);
        qk = (qk * qk) % n;
        u = u2;
        v = v2;
        if (mpz_tstbit(m.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) {
            // (U, V) <- ((U + V)/2, (V + D*U)/2), Q^k <- Q^k * Q
            Integer un = mod_canonical((u + v) * two_inv, n);
            Integer vn = mod_canonical((v + d * u) * two_inv, n);
            qk = mod_canonical(qk * q, n);
            u = un;
            v = vn;
        }
    }
    if (u == 0 || v == 0) return true;
    for (unsigned long r = 1; r < s; ++r) {
        // V <- V^2 - 2*Q^k, Q^k <- (Q^k)^2
        v = mod_canonical(v * v - 2 * qk, n);
        qk = (qk * qk) % n;
        if (v == 0) return true;
    }
    return false;
}

// deterministic witness set for n < 2^64
constexpr std::array<unsigned, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

Primality classify_prime(const Integer& n) {
    if (n < 2) return Primality::Composite;
    if (n < 4) return Primality::Prime;  // 2, 3
    if (mpz_even_p(n.get_mpz_t())) return Primality::Composite;

    Integer nm1 = n - 1;
    unsigned long s = mpz_scan1(nm1.get_mpz_t(), 0);
    Integer d = nm1 >> s;

    bool below64 = mpz_sizeinbase(n.get_mpz_t(), 2) <= 64 && n <= Integer("18446744073709551615");
    if (below64) {
        for (unsigned w : kWitnesses) {
            if (n == w) return Primality::Prime;
            if (!miller_rabin_round(n, d, s, Integer(w))) return Primality::Composite;
        }
        return Primality::Prime;
    }

    // Baillie-PSW: strong base-2 round plus strong Lucas round
    if (!miller_rabin_round(n, d, s, Integer(2))) return Primality::Composite;
    if (mpz_perfect_square_p(n.get_mpz_t())) return Primality::Composite;
    if (!strong_lucas_round(n)) return Primality::Composite;
    return Primality::ProbablePrime;
}

bool is_prime(const Integer& n) {
    return classify_prime(n) != Primality::Composite;
}

PrimePower::PrimePower(Integer prime, unsigned exponent) : p(std::move(prime)), ell(exponent) {
    if (!is_prime(p)) throw std::invalid_argument("PrimePower: p must be prime, got " + p.get_str());
}

std::vector<PrimePower> factorize(const Integer& n) {
    if (n < 2) throw std::invalid_argument("factorize: argument must be >= 2, got " + n.get_str());
    std::vector<PrimePower> factors;
    Integer rest = n;
    auto divide_out = [&](const Integer& p) {
        unsigned e = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            ++e;
        }
        if (e > 0) factors.emplace_back(p, e);
    };
    divide_out(Integer(2));
    for (Integer p = 3; p <= 1000000 && rest > 1 && p * p <= rest; p += 2) divide_out(p);
    if (rest > 1) {
        if (rest <= 1000000 * Integer(1000000)) {
            // remaining cofactor below the trial-division square is prime
            factors.emplace_back(rest, 1);
        } else if (is_prime(rest)) {
            factors.emplace_back(rest, 1);
        } else {
            throw FactorizationError("factorize: composite residual " + rest.get_str() +
                                     " exceeds the trial-division bound");
        }
    }
    return factors;
}

}
