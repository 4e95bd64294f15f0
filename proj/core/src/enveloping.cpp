#include "sbar/enveloping.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace sbar {

namespace {

const Letter kP1 = Letter::L(-1, 0);
const Letter kP2 = Letter::L(0, -1); // = -partial_2

void append_scaled_term(std::ostringstream& os, bool& first, const Scalar& c, const std::string& body)
{
    const Scalar mag = abs(c);
    if (first)
        os << (sgn(c) < 0 ? "-" : "");
    else
        os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    if (body.empty() || body == "1") {
        os << to_string(mag);
        return;
    }
    if (mag != 1)
        os << to_string(mag) << '*';
    os << body;
}

} // namespace

UEnvElement u_letter(const Letter& l, const Scalar& c) { return UEnv::letter(l, c); }
UEnvElement u_from_sbar(const SbarElement& x) { return UEnv::from_lie(x); }
UEnvElement u_d(int i) { return i == 1 ? u_from_sbar(sbar_d1()) : u_letter(Letter::d2()); }
UEnvElement u_partial(int i) { return i == 1 ? u_letter(kP1) : u_letter(kP2, -1); }

UEnvElement u_h_power(MultiIndex m)
{
    return u_mul(u_pow(u_d(1), m.first), u_pow(u_d(2), m.second));
}

UEnvElement pbw_normalize(std::span<const Letter> seq, const Scalar& c) { return UEnv::normalize(seq, c); }
UEnvElement u_mul(const UEnvElement& x, const UEnvElement& y) { return UEnv::multiply(x, y); }
UEnvElement u_commutator(const UEnvElement& x, const UEnvElement& y) { return UEnv::commutator(x, y); }
UEnvElement u_pow(const UEnvElement& x, int n) { return UEnv::pow(x, n); }

bool has_partial_letter(const PBWWord& w)
{
    for (const auto& l : w)
        if (l.is_partial())
            return true;
    return false;
}

bool in_nonneg_part(const UEnvElement& x)
{
    for (const auto& [w, c] : x)
        if (has_partial_letter(w))
            return false;
    return true;
}

std::string word_str(const PBWWord& w)
{
    if (w.empty())
        return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i])
            ++j;
        if (i > 0)
            os << '*';
        os << w[i].str();
        if (j - i > 1)
            os << '^' << (j - i);
        i = j;
    }
    return os.str();
}

std::string to_string(const UEnvElement& x)
{
    if (x.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : x)
        append_scaled_term(os, first, c, word_str(w));
    return os.str();
}

LocElement loc_one() { return LocElement(LocMonomial{{}, {0, 0}}, 1); }
LocElement loc_scalar(const Scalar& c) { return LocElement(LocMonomial{{}, {0, 0}}, c); }
LocElement loc_partial_power(MultiIndex m, const Scalar& c) { return LocElement(LocMonomial{{}, m}, c); }

LocElement to_loc(const UEnvElement& x)
{
    LocElement out;
    for (const auto& [w, c] : x) {
        std::size_t cut = w.size();
        while (cut > 0 && w[cut - 1].is_partial())
            --cut;
        MultiIndex m{0, 0};
        for (std::size_t i = cut; i < w.size(); ++i) {
            if (w[i] == kP1)
                ++m.first;
            else
                ++m.second;
        }
        for (std::size_t i = 0; i < cut; ++i)
            if (w[i].is_partial())
                throw std::logic_error("to_loc: partial letter inside a PBW head");
        const Scalar sign = (m.second % 2 == 0) ? 1 : -1;
        out.add_term(LocMonomial{PBWWord(w.begin(), w.begin() + static_cast<long>(cut)), m}, c * sign);
    }
    return out;
}

UEnvElement from_loc(const LocElement& x)
{
    UEnvElement out;
    for (const auto& [m, c] : x) {
        if (m.partials.first < 0 || m.partials.second < 0)
            throw std::domain_error("from_loc: negative partial exponent has no preimage in U(Sbar_2)");
        PBWWord w = m.head;
        w.insert(w.end(), static_cast<std::size_t>(m.partials.first), kP1);
        w.insert(w.end(), static_cast<std::size_t>(m.partials.second), kP2);
        out.add_term(std::move(w), (m.partials.second % 2 == 0) ? c : Scalar(-c));
    }
    return out;
}

namespace {

/// partial_i^m * (element), where partial_i^m is moved to the right of every head.
LocElement move_partials(int i, int m, const LocElement& e, int guard)
{
    if (m == 0)
        return e;
    const UEnvElement p = u_partial(i);
    LocElement out;
    for (const auto& [mono, c] : e) {
        UEnvElement cur(mono.head, 1);
        for (int k = 0;; ++k) {
            const Scalar b = binomial(m, k);
            if (!is_zero(b)) {
                MultiIndex shift = mono.partials;
                shift += (i == 1 ? MultiIndex{m - k, 0} : MultiIndex{0, m - k});
                for (const auto& [tm, tc] : to_loc(cur))
                    out.add_term(LocMonomial{tm.head, tm.partials + shift}, tc * b * c);
            }
            if (m > 0 && k >= m)
                break;
            cur = u_commutator(p, cur);
            if (cur.is_zero())
                break;
            if (k >= guard)
                throw std::logic_error("loc_mul: ad partial failed to become nilpotent");
        }
    }
    return out;
}

} // namespace

LocElement loc_mul(const LocElement& x, const LocElement& y, int guard)
{
    LocElement out;
    for (const auto& [mx, cx] : x) {
        for (const auto& [my, cy] : y) {
            LocElement moved(LocMonomial{my.head, {0, 0}}, 1);
            moved = move_partials(2, mx.partials.second, moved, guard);
            moved = move_partials(1, mx.partials.first, moved, guard);
            const UEnvElement left(mx.head, 1);
            for (const auto& [mm, cm] : moved) {
                const UEnvElement prod = u_mul(left, UEnvElement(mm.head, 1));
                for (const auto& [w, cw] : prod)
                    out.add_term(LocMonomial{w, mm.partials + my.partials}, cw * cm * cx * cy);
            }
        }
    }
    return out;
}

LocElement loc_commutator(const LocElement& x, const LocElement& y) { return loc_mul(x, y) - loc_mul(y, x); }

std::string to_string(const LocElement& x)
{
    if (x.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : x) {
        std::string body = m.head.empty() ? "" : word_str(m.head);
        auto add = [&](const char* name, int e) {
            if (e == 0)
                return;
            if (!body.empty())
                body += '*';
            body += name;
            if (e != 1)
                body += "^" + std::to_string(e);
        };
        add("p1", m.partials.first);
        add("p2", m.partials.second);
        append_scaled_term(os, first, c, body);
    }
    return os.str();
}

Q1Element q1_generator() { return Q1Element(PBWWord{}, 1); }

Q1Element reduce_mod_I1(const UEnvElement& x)
{
    Q1Element out;
    for (const auto& [m, c] : to_loc(x))
        out.add_term(m.head, c);
    return out;
}

UEnvElement q1_lift(const Q1Element& q)
{
    UEnvElement out;
    for (const auto& [w, c] : q)
        out.add_term(w, c);
    return out;
}

Q1Element q1_act(const UEnvElement& x, const Q1Element& q) { return reduce_mod_I1(u_mul(x, q1_lift(q))); }

namespace {

Q1Element apply_partial(int i, int m, const Q1Element& q, int guard)
{
    const UEnvElement p = u_partial(i);
    Q1Element cur = q;
    if (m >= 0) {
        for (int k = 0; k < m; ++k)
            cur = q1_act(p, cur);
        return cur;
    }
    for (int r = 0; r < -m; ++r) {
        // partial^{-1} = sum_k (-1)^k (partial - 1)^k on a Whittaker-type module
        Q1Element sum;
        Q1Element term = cur;
        for (int k = 0;; ++k) {
            sum.add_scaled(term, (k % 2 == 0) ? 1 : -1);
            term = q1_act(p, term) - term;
            if (term.is_zero())
                break;
            if (k >= guard)
                throw std::logic_error("q1_act: (partial - 1) is not nilpotent on this vector");
        }
        cur = std::move(sum);
    }
    return cur;
}

} // namespace

Q1Element q1_act(const LocElement& x, const Q1Element& q, int guard)
{
    Q1Element out;
    for (const auto& [m, c] : x) {
        Q1Element v = apply_partial(2, m.partials.second, q, guard);
        v = apply_partial(1, m.partials.first, v, guard);
        out.add_scaled(q1_act(UEnvElement(m.head, 1), v), c);
    }
    return out;
}

} // namespace sbar
