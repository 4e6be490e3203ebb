#include "sl2trace/tracepoly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "sl2trace/word.hpp"

namespace sl2trace {

// ---- BasisVar ---------------------------------------------------------------

BasisVar::BasisVar(const std::vector<int>& ascending_indices) {
    int prev = 0;
    for (int i : ascending_indices) {
        if (i <= prev || i > 63) throw Error(Errc::Index, "basis variable indices must ascend within [1, 63]");
        mask_ |= std::uint64_t{1} << (i - 1);
        prev = i;
    }
    if (mask_ == 0) throw Error(Errc::Index, "basis variable needs at least one index");
}

BasisVar BasisVar::single(int generator) { return BasisVar(std::vector<int>{generator}); }

BasisVar BasisVar::from_mask(std::uint64_t mask) {
    BasisVar v;
    v.mask_ = mask;
    return v;
}

std::vector<int> BasisVar::indices() const {
    std::vector<int> out;
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
}

int BasisVar::size() const noexcept { return std::popcount(mask_); }

bool BasisVar::contains(int generator) const noexcept {
    return generator >= 1 && generator <= 63 && ((mask_ >> (generator - 1)) & 1U) != 0;
}

int BasisVar::max_index() const noexcept { return mask_ == 0 ? 0 : 64 - std::countl_zero(mask_); }

std::string BasisVar::name() const {
    const bool wide = max_index() >= 10;
    std::string out = "t";
    for (int i : indices()) {
        if (wide) out += '_';
        out += std::to_string(i);
    }
    return out;
}

BasisVar BasisVar::parse(std::string_view name) {
    const auto bad = [&] { return Error(Errc::Schema, "bad trace variable name '" + std::string(name) + "'"); };
    if (name.size() < 2 || name[0] != 't') throw bad();
    const std::string_view body = name.substr(1);
    std::vector<int> idx;
    if (body[0] == '_') {
        std::size_t pos = 0;
        while (pos < body.size()) {
            if (body[pos++] != '_' || pos == body.size()) throw bad();
            int v = 0;
            std::size_t digits = 0;
            for (; pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos])) && digits < 3; ++digits) {
                v = v * 10 + (body[pos++] - '0');
            }
            if (digits == 0) throw bad();
            idx.push_back(v);
        }
    } else {
        for (char ch : body) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) throw bad();
            idx.push_back(ch - '0');
        }
    }
    BasisVar v;
    try {
        v = BasisVar(idx);
    } catch (const Error&) {
        throw bad();
    }
    // Only the canonical spelling is accepted, so names and variables correspond one to one.
    if (v.name() != name) throw bad();
    return v;
}

std::strong_ordering operator<=>(const BasisVar& x, const BasisVar& y) noexcept {
    if (auto c = x.size() <=> y.size(); c != 0) return c;
    // Equal sizes: the set holding the smallest element of the symmetric
    // difference comes first in lex order of the ascending index lists.
    const std::uint64_t diff = x.mask_ ^ y.mask_;
    if (diff == 0) return std::strong_ordering::equal;
    const std::uint64_t lowest = diff & (~diff + 1);
    return (x.mask_ & lowest) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::vector<BasisVar> basis_for(int n) {
    if (n < 1 || n > 20) throw Error(Errc::Index, "basis size must be in [1, 20]");
    std::vector<BasisVar> out;
    out.reserve((std::size_t{1} << n) - 1);
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) out.push_back(BasisVar::from_mask(m));
    std::sort(out.begin(), out.end());
    return out;
}

FreeWord basis_word(BasisVar v) {
    std::vector<Syllable> s;
    for (int i : v.indices()) s.push_back({i, 1});
    return FreeWord(std::move(s));
}

// ---- Monomial ---------------------------------------------------------------

Monomial::Monomial(BasisVar v, unsigned exponent) {
    if (exponent != 0) factors_.emplace_back(v, exponent);
}

unsigned Monomial::degree() const noexcept {
    unsigned d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
}

unsigned Monomial::exponent_of(BasisVar v) const noexcept {
    for (const auto& f : factors_) {
        if (f.first == v) return f.second;
    }
    return 0;
}

Monomial operator*(const Monomial& x, const Monomial& y) {
    std::vector<Monomial::Factor> out;
    out.reserve(x.factors_.size() + y.factors_.size());
    auto i = x.factors_.begin();
    auto j = y.factors_.begin();
    while (i != x.factors_.end() && j != y.factors_.end()) {
        if (i->first == j->first) {
            out.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        } else if (i->first < j->first) {
            out.push_back(*i++);
        } else {
            out.push_back(*j++);
        }
    }
    out.insert(out.end(), i, x.factors_.end());
    out.insert(out.end(), j, y.factors_.end());
    return Monomial(std::move(out));
}

std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) noexcept {
    if (auto c = x.degree() <=> y.degree(); c != 0) return c;
    // Walk the expanded variable sequences; equal degrees keep them equally long.
    auto i = x.factors_.begin();
    auto j = y.factors_.begin();
    while (i != x.factors_.end() && j != y.factors_.end()) {
        if (auto c = i->first <=> j->first; c != 0) return c;
        if (i->second != j->second) {
            // The larger power repeats the shared variable where the other moves on.
            return i->second > j->second ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        ++i;
        ++j;
    }
    return std::strong_ordering::equal;
}

Monomial Monomial::without_one(BasisVar v) const {
    std::vector<Factor> out;
    out.reserve(factors_.size());
    for (const auto& f : factors_) {
        if (f.first == v) {
            if (f.second > 1) out.emplace_back(f.first, f.second - 1);
        } else {
            out.push_back(f);
        }
    }
    return Monomial(std::move(out));
}

// ---- TracePoly --------------------------------------------------------------

TracePoly::TracePoly(long constant) {
    if (constant != 0) terms_.emplace(Monomial(), mpz_class(constant));
}

TracePoly::TracePoly(const mpz_class& constant) {
    if (constant != 0) terms_.emplace(Monomial(), constant);
}

TracePoly TracePoly::variable(BasisVar v) { return term(1, Monomial(v)); }

TracePoly TracePoly::term(const mpz_class& coeff, const Monomial& m) {
    TracePoly p;
    p.add_term(m, coeff);
    return p;
}

void TracePoly::add_term(const Monomial& m, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

unsigned TracePoly::degree() const noexcept {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

std::set<BasisVar> TracePoly::variables() const {
    std::set<BasisVar> out;
    for (const auto& [m, c] : terms_) {
        for (const auto& f : m.factors()) out.insert(f.first);
    }
    return out;
}

bool TracePoly::contains(BasisVar v) const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [v](const auto& t) { return t.first.exponent_of(v) != 0; });
}

TracePoly& TracePoly::operator+=(const TracePoly& q) {
    for (const auto& [m, c] : q.terms_) add_term(m, c);
    return *this;
}

TracePoly& TracePoly::operator-=(const TracePoly& q) {
    for (const auto& [m, c] : q.terms_) add_term(m, -c);
    return *this;
}

TracePoly operator-(const TracePoly& p) {
    TracePoly out = p;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

TracePoly operator*(const TracePoly& p, const TracePoly& q) {
    TracePoly out;
    for (const auto& [mp, cp] : p.terms_) {
        for (const auto& [mq, cq] : q.terms_) out.add_term(mp * mq, cp * cq);
    }
    return out;
}

std::string TracePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    const auto emit = [&out](const Monomial& m, const mpz_class& c) {
        const bool negative = c < 0;
        const mpz_class magnitude = abs(c);
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        std::string body;
        for (const auto& [v, e] : m.factors()) {
            if (!body.empty()) body += '*';
            body += v.name();
            if (e != 1) body += '^' + std::to_string(e);
        }
        if (body.empty()) {
            out += magnitude.get_str();
        } else if (magnitude == 1) {
            out += body;
        } else {
            out += magnitude.get_str() + '*' + body;
        }
    };
    for (const auto& [m, c] : terms_) {
        if (!m.is_constant()) emit(m, c);
    }
    if (auto it = terms_.find(Monomial()); it != terms_.end()) emit(it->first, it->second);
    return out;
}

// ---- evaluation -------------------------------------------------------------

Complex evaluate_poly(const TracePoly& p, const TraceValues& values) {
    // Kahan-compensated sum over terms; products use integer powers.
    Complex sum = 0.0;
    Complex carry = 0.0;
    for (const auto& [m, c] : p.terms()) {
        Complex term = c.get_d();
        for (const auto& [v, e] : m.factors()) {
            auto it = values.find(v);
            if (it == values.end()) throw Error(Errc::MissingVariable, "no value for " + v.name());
            Complex pw = 1.0;
            for (unsigned k = 0; k < e; ++k) pw *= it->second;
            term *= pw;
        }
        const Complex y = term - carry;
        const Complex t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return sum;
}

TraceValues basis_traces(std::span<const Mat2C> generators) {
    TraceValues out;
    if (generators.empty()) return out;
    for (BasisVar v : basis_for(static_cast<int>(generators.size()))) {
        out.emplace(v, evaluate_word(basis_word(v), generators).trace());
    }
    return out;
}

}  // namespace sl2trace
