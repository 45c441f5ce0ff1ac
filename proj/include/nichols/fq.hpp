#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Exact arithmetic over F_{p^m}, p an odd prime, m <= 8.
// Elements are packed coefficient vectors (8 limbs of uint8), so p <= 251.

namespace nichols {

struct FieldError : std::runtime_error {
    explicit FieldError(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond)
        throw FieldError(msg);
}

// element of F_{p^m}: limb i = coefficient of t^i, reduced mod p
struct Fq {
    uint64_t bits = 0;

    friend bool operator==(Fq a, Fq b) { return a.bits == b.bits; }
    friend bool operator!=(Fq a, Fq b) { return a.bits != b.bits; }
    bool is_zero() const { return bits == 0; }
};

struct FqHash {
    size_t operator()(Fq a) const { return std::hash<uint64_t>{}(a.bits); }
};

inline uint8_t fq_limb(Fq a, int i) { return uint8_t(a.bits >> (8 * i)); }

inline bool is_prime_u64(uint64_t n) {
    if (n < 2)
        return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

class Field {
public:
    // modulus: coefficients c0..c_{m-1} of the monic polynomial t^m + c_{m-1}t^{m-1} + ... + c0
    Field(uint32_t p, uint32_t m, std::optional<std::vector<uint32_t>> modulus = std::nullopt)
        : p_(p), m_(m) {
        require(p % 2 == 1 && is_prime_u64(p), "p must be an odd prime");
        require(m >= 1 && m <= 8, "extension degree m must be in 1..8");
        require(m == 1 || p <= 251, "p too large for extension fields (limb encoding)");
        order_ = 1;
        for (uint32_t i = 0; i < m_; ++i) {
            require(order_ <= UINT64_MAX / p_, "field order overflow");
            order_ *= p_;
        }
        if (m_ == 1) {
            modulus_ = {0};
        } else if (modulus) {
            require(modulus->size() == m_, "modulus must list m coefficients c0..c_{m-1}");
            modulus_.assign(modulus->begin(), modulus->end());
            for (auto& c : modulus_)
                c %= p_;
            require(is_irreducible(modulus_), "modulus is reducible over F_p");
        } else {
            require(m_ <= 4, "default modulus search only for m <= 4; pass one explicitly");
            modulus_ = find_irreducible();
        }
        find_primitive();
    }

    uint32_t p() const { return p_; }
    uint32_t m() const { return m_; }
    uint64_t order() const { return order_; }          // p^m
    uint64_t group_order() const { return order_ - 1; } // |F_q^x|
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    Fq zero() const { return {}; }
    Fq one() const { return from_int(1); }

    Fq from_int(int64_t n) const {
        int64_t r = n % int64_t(p_);
        if (r < 0)
            r += p_;
        Fq a;
        a.bits = uint64_t(r);
        return a;
    }

    // element from coefficient list c0..c_{m-1}
    Fq from_coeffs(const std::vector<int64_t>& c) const {
        require(c.size() <= m_, "too many coefficients");
        Fq a;
        for (size_t i = 0; i < c.size(); ++i) {
            int64_t r = c[i] % int64_t(p_);
            if (r < 0)
                r += p_;
            a.bits |= uint64_t(r) << (8 * i);
        }
        return a;
    }

    Fq add(Fq a, Fq b) const {
        if (m_ == 1)
            return Fq{(a.bits + b.bits) % p_};
        Fq r;
        for (uint32_t i = 0; i < m_; ++i) {
            uint32_t s = fq_limb(a, i) + fq_limb(b, i);
            if (s >= p_)
                s -= p_;
            r.bits |= uint64_t(s) << (8 * i);
        }
        return r;
    }

    Fq neg(Fq a) const {
        if (m_ == 1)
            return Fq{a.bits == 0 ? 0 : p_ - a.bits};
        Fq r;
        for (uint32_t i = 0; i < m_; ++i) {
            uint32_t c = fq_limb(a, i);
            r.bits |= uint64_t(c == 0 ? 0 : p_ - c) << (8 * i);
        }
        return r;
    }

    Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }

    Fq mul(Fq a, Fq b) const {
        if (m_ == 1)
            return Fq{(a.bits * b.bits) % p_};
        if (a.bits == 0 || b.bits == 0)
            return {};
        // schoolbook product then reduction by the monic modulus
        std::array<uint32_t, 15> prod{};
        for (uint32_t i = 0; i < m_; ++i) {
            uint32_t ai = fq_limb(a, i);
            if (!ai)
                continue;
            for (uint32_t j = 0; j < m_; ++j)
                prod[i + j] = (prod[i + j] + ai * fq_limb(b, j)) % p_;
        }
        for (int d = int(2 * m_ - 2); d >= int(m_); --d) {
            uint32_t c = prod[d];
            if (!c)
                continue;
            prod[d] = 0;
            // t^m = -modulus_[0] - ... - modulus_[m-1] t^{m-1}
            for (uint32_t j = 0; j < m_; ++j) {
                uint32_t sub_amt = (c * modulus_[j]) % p_;
                prod[d - m_ + j] = (prod[d - m_ + j] + p_ - sub_amt) % p_;
            }
        }
        Fq r;
        for (uint32_t i = 0; i < m_; ++i)
            r.bits |= uint64_t(prod[i]) << (8 * i);
        return r;
    }

    Fq pow(Fq a, uint64_t e) const {
        Fq r = one(), base = a;
        while (e) {
            if (e & 1)
                r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    Fq inv(Fq a) const {
        require(!a.is_zero(), "division by zero in F_q");
        return pow(a, group_order() - 1);
    }

    Fq half() const { return inv(from_int(2)); } // legal: p odd

    // multiplicative order of a nonzero element
    uint64_t mult_order(Fq a) const {
        require(!a.is_zero(), "order of zero undefined");
        uint64_t ord = group_order();
        for (uint64_t q : prime_factors(group_order())) {
            while (ord % q == 0 && pow(a, ord / q) == one())
                ord /= q;
        }
        return ord;
    }

    Fq primitive_element() const { return generator_; }

    // element of multiplicative order exactly d
    Fq root_of_unity(uint64_t d) const {
        require(d >= 1, "order must be positive");
        require(group_order() % d == 0,
                "no root of unity of order " + std::to_string(d) + " in F_" +
                    std::to_string(order()) + " (field too small)");
        return pow(generator_, group_order() / d);
    }

    // enumeration: index in [0, p^m) <-> element, base-p digits
    Fq element(uint64_t idx) const {
        Fq a;
        for (uint32_t i = 0; i < m_; ++i) {
            a.bits |= (idx % p_) << (8 * i);
            idx /= p_;
        }
        return a;
    }

    uint64_t index_of(Fq a) const {
        uint64_t idx = 0, mult = 1;
        for (uint32_t i = 0; i < m_; ++i) {
            idx += fq_limb(a, i) * mult;
            mult *= p_;
        }
        return idx;
    }

    // integer representative in 0..p-1 (prime-subfield elements only)
    uint32_t to_int(Fq a) const {
        for (uint32_t i = 1; i < m_; ++i)
            require(fq_limb(a, i) == 0, "element not in the prime subfield");
        return fq_limb(a, 0);
    }

    std::string to_string(Fq a) const {
        if (m_ == 1)
            return std::to_string(fq_limb(a, 0));
        std::string s = "[";
        for (uint32_t i = 0; i < m_; ++i) {
            if (i)
                s += ",";
            s += std::to_string(fq_limb(a, i));
        }
        return s + "]";
    }

    static std::vector<uint64_t> prime_factors(uint64_t n) {
        std::vector<uint64_t> fs;
        for (uint64_t d = 2; d * d <= n; ++d) {
            if (n % d == 0) {
                fs.push_back(d);
                while (n % d == 0)
                    n /= d;
            }
        }
        if (n > 1)
            fs.push_back(n);
        return fs;
    }

private:
    // polynomial helpers over F_p, coefficient vectors (low degree first, not monic-padded)
    using Poly = std::vector<uint32_t>;

    uint32_t padd(uint32_t a, uint32_t b) const { return (a + b) % p_; }
    uint32_t pmul(uint32_t a, uint32_t b) const { return (a * b) % p_; }

    uint32_t eval_monic(const Poly& lower, uint32_t x) const {
        // evaluates t^deg + lower(t) at x, deg = lower.size()
        uint32_t v = 1;
        for (size_t i = 0; i < lower.size(); ++i)
            v = pmul(v, x);
        uint32_t xp = 1, acc = 0;
        for (size_t i = 0; i < lower.size(); ++i) {
            acc = padd(acc, pmul(lower[i], xp));
            xp = pmul(xp, x);
        }
        return padd(v, acc);
    }

    // divide the monic poly t^m + lower(t) by monic divisor of degree d; true iff remainder 0
    bool monic_divides(const Poly& div_lower, uint32_t d, const Poly& lower) const {
        std::vector<uint32_t> rem(m_ + 1, 0);
        for (uint32_t i = 0; i < m_; ++i)
            rem[i] = lower[i];
        rem[m_] = 1;
        for (int top = int(m_); top >= int(d); --top) {
            uint32_t c = rem[top];
            if (!c)
                continue;
            rem[top] = 0;
            for (uint32_t j = 0; j < d; ++j)
                rem[top - d + j] = (rem[top - d + j] + p_ * p_ - pmul(c, div_lower[j])) % p_;
        }
        for (auto c : rem)
            if (c)
                return false;
        return true;
    }

    bool is_irreducible(const Poly& lower) const {
        // no root in F_p
        for (uint32_t x = 0; x < p_; ++x)
            if (eval_monic(lower, x) == 0)
                return false;
        if (m_ <= 3)
            return true; // degree 2,3: a factor would be linear
        // exhaustive trial by monic divisors of degree 2..m/2 (feasible for small p)
        uint64_t budget = 1;
        for (uint32_t i = 0; i < m_ / 2; ++i)
            budget *= p_;
        require(budget <= 2'000'000, "irreducibility trial too large; pass a verified modulus");
        for (uint32_t d = 2; d <= m_ / 2; ++d) {
            uint64_t count = 1;
            for (uint32_t i = 0; i < d; ++i)
                count *= p_;
            for (uint64_t idx = 0; idx < count; ++idx) {
                Poly div(d);
                uint64_t k = idx;
                for (uint32_t i = 0; i < d; ++i) {
                    div[i] = uint32_t(k % p_);
                    k /= p_;
                }
                if (monic_divides(div, d, lower))
                    return false;
            }
        }
        return true;
    }

    Poly find_irreducible() const {
        uint64_t count = 1;
        for (uint32_t i = 0; i < m_; ++i)
            count *= p_;
        for (uint64_t idx = 0; idx < count; ++idx) {
            Poly lower(m_);
            uint64_t k = idx;
            for (uint32_t i = 0; i < m_; ++i) {
                lower[i] = uint32_t(k % p_);
                k /= p_;
            }
            if (is_irreducible(lower))
                return lower;
        }
        throw FieldError("no irreducible polynomial found"); // unreachable
    }

    void find_primitive() {
        auto fs = prime_factors(group_order());
        for (uint64_t idx = 1; idx < order_; ++idx) {
            Fq g = element(idx);
            bool prim = true;
            for (uint64_t q : fs) {
                if (pow(g, group_order() / q) == one()) {
                    prim = false;
                    break;
                }
            }
            if (prim) {
                generator_ = g;
                return;
            }
        }
        throw FieldError("no primitive element found"); // unreachable
    }

    uint32_t p_, m_;
    uint64_t order_;
    Poly modulus_;
    Fq generator_;
};

} // namespace nichols
