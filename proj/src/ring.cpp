#include "c2ext/ring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace c2ext {

RingSpec::RingSpec(std::vector<Variable> vars) : vars_(std::move(vars)) {
    std::set<std::string> seen;
    for (const Variable& v : vars_) {
        if (v.name.empty()) throw std::invalid_argument("ring: empty variable name");
        if (v.weight < 1) throw std::invalid_argument("ring: weight must be >= 1");
        if (!seen.insert(v.name).second)
            throw std::invalid_argument("ring: duplicate variable name '" + v.name + "'");
    }
}

int RingSpec::max_weight() const {
    int w = 1;
    for (const Variable& v : vars_) w = std::max(w, v.weight);
    return w;
}

std::size_t RingSpec::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name) return i;
    return npos;
}

RingPtr make_ring(std::vector<RingSpec::Variable> vars) {
    return std::make_shared<const RingSpec>(std::move(vars));
}

int Monomial::total_exponent() const {
    int s = 0;
    for (int e : exponents) s += e;
    return s;
}

int weighted_degree(const Monomial& m, const RingSpec& ring) {
    if (m.exponents.size() != ring.size())
        throw std::invalid_argument("monomial does not match ring");
    int d = 0;
    for (std::size_t i = 0; i < ring.size(); ++i) d += m.exponents[i] * ring.weight(i);
    return d;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    if (a.exponents.size() != b.exponents.size())
        throw std::invalid_argument("monomial size mismatch");
    Monomial c = a;
    for (std::size_t i = 0; i < b.exponents.size(); ++i) c.exponents[i] += b.exponents[i];
    return c;
}

bool grevlex_less(const Monomial& a, const Monomial& b, const RingSpec& ring) {
    int da = weighted_degree(a, ring);
    int db = weighted_degree(b, ring);
    if (da != db) return da < db;
    // Reverse lex: the last nonzero entry of a-b decides; negative means a > b.
    for (std::size_t i = ring.size(); i-- > 0;) {
        int diff = a.exponents[i] - b.exponents[i];
        if (diff != 0) return diff > 0;  // a < b iff trailing diff positive
    }
    return false;
}

namespace {
void enumerate(const RingSpec& ring, std::size_t var, int remaining, Monomial& current,
               std::vector<Monomial>& out) {
    if (var == ring.size()) {
        if (remaining == 0) out.push_back(current);
        return;
    }
    if (var + 1 == ring.size()) {
        int w = ring.weight(var);
        if (remaining % w == 0) {
            current.exponents[var] = remaining / w;
            out.push_back(current);
            current.exponents[var] = 0;
        }
        return;
    }
    int w = ring.weight(var);
    for (int e = 0; e * w <= remaining; ++e) {
        current.exponents[var] = e;
        enumerate(ring, var + 1, remaining - e * w, current, out);
    }
    current.exponents[var] = 0;
}
}  // namespace

std::vector<Monomial> monomials_of_degree(const RingSpec& ring, int d) {
    if (d < 0) throw std::invalid_argument("monomials_of_degree: negative degree");
    std::vector<Monomial> out;
    Monomial current = Monomial::one(ring.size());
    if (ring.size() == 0) {
        if (d == 0) out.push_back(current);
        return out;
    }
    enumerate(ring, 0, d, current, out);
    std::sort(out.begin(), out.end(), [&ring](const Monomial& a, const Monomial& b) {
        return grevlex_less(b, a, ring);  // descending
    });
    return out;
}

}  // namespace c2ext
