#include "refasm/exactnum/zkernel.hpp"

#include "refasm/errors.hpp"

#include <algorithm>
#include <cstring>

namespace refasm::zkernel {

namespace {

constexpr std::size_t kLimbBits = GMP_NUMB_BITS;

void trim(Coeffs& c)
{
    while (!c.empty() && sgn(c.back()) == 0) {
        c.pop_back();
    }
}

std::size_t bit_length(std::size_t v)
{
    std::size_t b = 0;
    while (v > 0) {
        ++b;
        v >>= 1u;
    }
    return b;
}

std::size_t limbs_for_bits(std::size_t bits)
{
    return (bits + kLimbBits - 1) / kLimbBits;
}

} // namespace

std::size_t max_bits(std::span<const Integer> a)
{
    std::size_t m = 0;
    for (const auto& c : a) {
        if (sgn(c) != 0) {
            m = std::max(m, mpz_sizeinbase(c.get_mpz_t(), 2));
        }
    }
    return m;
}

Integer content(std::span<const Integer> a)
{
    Integer g = 0;
    for (const auto& c : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) {
            break;
        }
    }
    return g;
}

Integer pack(std::span<const Integer> a, std::size_t slot_limbs)
{
    const std::size_t total = a.size() * slot_limbs;
    Integer pos;
    Integer neg;
    if (total == 0) {
        return pos;
    }
    mp_limb_t* pp = mpz_limbs_write(pos.get_mpz_t(), static_cast<mp_size_t>(total));
    mp_limb_t* np = mpz_limbs_write(neg.get_mpz_t(), static_cast<mp_size_t>(total));
    std::memset(pp, 0, total * sizeof(mp_limb_t));
    std::memset(np, 0, total * sizeof(mp_limb_t));
    for (std::size_t i = 0; i < a.size(); ++i) {
        const mpz_srcptr z = a[i].get_mpz_t();
        const std::size_t n = mpz_size(z);
        if (n == 0) {
            continue;
        }
        if (n > slot_limbs) {
            throw Error("pack: coefficient wider than its slot");
        }
        mp_limb_t* dst = (sgn(a[i]) > 0 ? pp : np) + i * slot_limbs;
        std::memcpy(dst, mpz_limbs_read(z), n * sizeof(mp_limb_t));
    }
    mpz_limbs_finish(pos.get_mpz_t(), static_cast<mp_size_t>(total));
    mpz_limbs_finish(neg.get_mpz_t(), static_cast<mp_size_t>(total));
    return Integer(pos - neg);
}

Coeffs unpack(const Integer& v, std::size_t slot_limbs)
{
    Coeffs out;
    if (sgn(v) == 0) {
        return out;
    }
    const bool negative = sgn(v) < 0;
    Integer mag = abs(v);
    const mpz_srcptr z = mag.get_mpz_t();
    const std::size_t size = mpz_size(z);
    const mp_limb_t* limbs = mpz_limbs_read(z);
    Integer half;
    Integer full;
    mpz_setbit(half.get_mpz_t(), slot_limbs * kLimbBits - 1);
    mpz_setbit(full.get_mpz_t(), slot_limbs * kLimbBits);
    const std::size_t slots = (size + slot_limbs - 1) / slot_limbs;
    out.reserve(slots + 1);
    int carry = 0;
    Integer d;
    for (std::size_t i = 0; i < slots; ++i) {
        const std::size_t start = i * slot_limbs;
        const std::size_t count = std::min(slot_limbs, size - start);
        mpz_import(d.get_mpz_t(), count, -1, sizeof(mp_limb_t), 0, 0, limbs + start);
        if (carry) {
            d += 1;
        }
        if (d >= half) {
            d -= full;
            carry = 1;
        } else {
            carry = 0;
        }
        out.push_back(d);
    }
    if (carry) {
        out.emplace_back(1);
    }
    if (negative) {
        for (auto& c : out) {
            c = -c;
        }
    }
    trim(out);
    return out;
}

Coeffs mul_schoolbook(std::span<const Integer> a, std::span<const Integer> b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    Coeffs out(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    trim(out);
    return out;
}

Coeffs mul(std::span<const Integer> a, std::span<const Integer> b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    const std::size_t shorter = std::min(a.size(), b.size());
    if (shorter < kKroneckerThreshold) {
        return mul_schoolbook(a, b);
    }
    const std::size_t bits = max_bits(a) + max_bits(b) + bit_length(shorter) + 2;
    const std::size_t w = limbs_for_bits(bits);
    Integer prod = pack(a, w) * pack(b, w);
    return unpack(prod, w);
}

namespace {

std::optional<Coeffs> exact_div_schoolbook(std::span<const Integer> a, std::span<const Integer> b)
{
    Coeffs rem(a.begin(), a.end());
    const std::size_t db = b.size() - 1;
    Coeffs quot(a.size() - db);
    const Integer& lead = b.back();
    Integer c;
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Integer& top = rem[k + db];
        if (sgn(top) != 0) {
            if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
                return std::nullopt;
            }
            mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
            for (std::size_t j = 0; j < db; ++j) {
                mpz_submul(rem[k + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
            }
            rem[k + db] = 0;
            quot[k] = c;
        } else {
            quot[k] = 0;
        }
    }
    for (std::size_t j = 0; j < db; ++j) {
        if (sgn(rem[j]) != 0) {
            return std::nullopt;
        }
    }
    trim(quot);
    return quot;
}

} // namespace

std::optional<Coeffs> exact_div(std::span<const Integer> a, std::span<const Integer> b)
{
    if (b.empty()) {
        throw DivisionByZero("integer polynomial division by zero");
    }
    if (a.empty()) {
        return Coeffs{};
    }
    if (a.size() < b.size()) {
        return std::nullopt;
    }
    const std::size_t qlen = a.size() - b.size() + 1;
    if (std::min(qlen, b.size()) < kKroneckerThreshold) {
        return exact_div_schoolbook(a, b);
    }
    // Any factor q of a satisfies |q|_inf <= 2^deg(q) |a|_2.
    const std::size_t qbits = max_bits(a) + (bit_length(a.size()) + 1) / 2 + qlen + 1;
    const std::size_t w = limbs_for_bits(std::max(qbits, max_bits(b)) + 2);
    Integer pa = pack(a, w);
    Integer pb = pack(b, w);
    if (!mpz_divisible_p(pa.get_mpz_t(), pb.get_mpz_t())) {
        return std::nullopt;
    }
    Integer pq;
    mpz_divexact(pq.get_mpz_t(), pa.get_mpz_t(), pb.get_mpz_t());
    Coeffs q = unpack(pq, w);
    if (q.size() != qlen) {
        return std::nullopt;
    }
    Coeffs check = mul(q, b);
    if (!std::equal(check.begin(), check.end(), a.begin(), a.end())) {
        return std::nullopt;
    }
    return q;
}

std::optional<Coeffs> gcd_heuristic(std::span<const Integer> a, std::span<const Integer> b)
{
    if (a.empty() || b.empty()) {
        return std::nullopt;
    }
    if (a.size() == 1 || b.size() == 1) {
        return Coeffs{Integer(1)};
    }
    std::size_t w = limbs_for_bits(std::max(max_bits(a), max_bits(b)) + 2);
    for (int attempt = 0; attempt < 4; ++attempt, w += 1 + w / 2) {
        Integer g;
        Integer pa = pack(a, w);
        Integer pb = pack(b, w);
        mpz_gcd(g.get_mpz_t(), pa.get_mpz_t(), pb.get_mpz_t());
        Coeffs cand = unpack(g, w);
        if (cand.empty()) {
            continue;
        }
        Integer c = content(cand);
        if (sgn(cand.back()) < 0) {
            c = -c;
        }
        for (auto& x : cand) {
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        }
        if (cand.size() == 1) {
            return cand;
        }
        if (exact_div(a, cand) && exact_div(b, cand)) {
            return cand;
        }
    }
    return std::nullopt;
}

} // namespace refasm::zkernel
