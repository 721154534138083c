#pragma once

#include <memory>
#include <string>
#include <vector>

#include "c2ext/rational.hpp"

namespace c2ext {

/// Weighted polynomial ring over Q. The declared variable order is fixed at
/// creation and defines the monomial order (graded reverse lexicographic).
class RingSpec {
public:
    struct Variable {
        std::string name;
        int weight = 1;
        bool operator==(const Variable&) const = default;
    };

    explicit RingSpec(std::vector<Variable> vars);

    std::size_t size() const { return vars_.size(); }
    const std::string& name(std::size_t i) const { return vars_[i].name; }
    int weight(std::size_t i) const { return vars_[i].weight; }
    const std::vector<Variable>& variables() const { return vars_; }
    int max_weight() const;
    /// Index of a variable by name, or npos.
    std::size_t index_of(const std::string& name) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    bool operator==(const RingSpec& other) const { return vars_ == other.vars_; }

private:
    std::vector<Variable> vars_;
};

using RingPtr = std::shared_ptr<const RingSpec>;

RingPtr make_ring(std::vector<RingSpec::Variable> vars);

/// Exponent vector, one entry per ring variable.
struct Monomial {
    std::vector<int> exponents;

    static Monomial one(std::size_t nvars) { return Monomial{std::vector<int>(nvars, 0)}; }
    static Monomial variable(std::size_t nvars, std::size_t i) {
        Monomial m = one(nvars);
        m.exponents[i] = 1;
        return m;
    }
    int total_exponent() const;
    bool operator==(const Monomial&) const = default;
    /// Arbitrary strict total order (container use only, not the monomial order).
    bool operator<(const Monomial& other) const { return exponents < other.exponents; }
};

int weighted_degree(const Monomial& m, const RingSpec& ring);
Monomial mono_mul(const Monomial& a, const Monomial& b);

/// Graded reverse lexicographic order w.r.t. the declared variable order:
/// compare weighted degree first; ties broken so that the monomial whose
/// trailing exponent difference is negative is the larger one.
bool grevlex_less(const Monomial& a, const Monomial& b, const RingSpec& ring);

/// All monomials of weighted degree d, in descending grevlex order.
std::vector<Monomial> monomials_of_degree(const RingSpec& ring, int d);

}  // namespace c2ext
