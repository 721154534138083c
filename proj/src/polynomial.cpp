#include "c2ext/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace c2ext {

Polynomial Polynomial::term(RingPtr ring, const Monomial& m, const Rational& c) {
    Polynomial p(std::move(ring));
    p.add_term(m, c);
    return p;
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
    std::size_t n = ring->size();
    return term(std::move(ring), Monomial::one(n), c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
    std::size_t n = ring->size();
    return term(std::move(ring), Monomial::variable(n, i), Rational(1));
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.exponents.size() != ring_->size())
        throw std::invalid_argument("polynomial: monomial does not match ring");
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::check_same_ring(const Polynomial& other) const {
    if (ring_ == other.ring_) return;
    if (!(*ring_ == *other.ring_)) throw std::invalid_argument("polynomial: ring mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    check_same_ring(other);
    Polynomial out = *this;
    for (const auto& [m, c] : other.terms_) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    check_same_ring(other);
    Polynomial out = *this;
    for (const auto& [m, c] : other.terms_) out.add_term(m, Rational(-c));
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(ring_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, Rational(-c));
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    check_same_ring(other);
    Polynomial out(ring_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_) out.add_term(mono_mul(ma, mb), Rational(ca * cb));
    return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial out(ring_);
    if (c == 0) return out;
    for (const auto& [m, q] : terms_) out.terms_.emplace(m, Rational(q * c));
    return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
    return *ring_ == *other.ring_ && terms_ == other.terms_;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, weighted_degree(m, *ring_));
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int dm = weighted_degree(m, *ring_);
        if (d == -1) d = dm;
        else if (d != dm) return false;
    }
    return true;
}

bool Polynomial::in_power_of_irrelevant_ideal(int k) const {
    for (const auto& [m, c] : terms_)
        if (m.total_exponent() < k) return false;
    return true;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

QVector Polynomial::coefficients_on(const std::vector<Monomial>& monos) const {
    QVector v(monos.size(), Rational(0));
    for (std::size_t i = 0; i < monos.size(); ++i) v[i] = coefficient(monos[i]);
    return v;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    Polynomial out(ring_);
    for (const auto& [m, c] : terms_) {
        int e = m.exponents[var];
        if (e == 0) continue;
        Monomial dm = m;
        dm.exponents[var] = e - 1;
        out.add_term(dm, Rational(c * e));
    }
    return out;
}

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    Integer read_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected number", pos);
        return Integer(text.substr(start, pos - start));
    }
    std::string read_identifier() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() &&
            (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (pos == start) throw ParseError("expected identifier", pos);
        return text.substr(start, pos - start);
    }
};

}  // namespace

Polynomial parse_polynomial(RingPtr ring, const std::string& text) {
    Lexer lex{text};
    Polynomial result(ring);
    bool first = true;
    while (!lex.eof()) {
        Rational sign(1);
        if (lex.consume('+')) {
            sign = 1;
        } else if (lex.consume('-')) {
            sign = -1;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", lex.pos);
        }
        // Collapse any further leading signs.
        for (;;) {
            if (lex.consume('-')) sign = -sign;
            else if (lex.consume('+')) continue;
            else break;
        }
        first = false;

        Rational coeff = sign;
        Monomial mono = Monomial::one(ring->size());
        bool saw_factor = false;

        char c = lex.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = lex.read_integer();
            Integer den(1);
            if (lex.consume('/')) den = lex.read_integer();
            if (den == 0) throw ParseError("zero denominator", lex.pos);
            coeff *= Rational(num, den);
            saw_factor = true;
            if (!lex.consume('*')) {
                // A bare coefficient ends the term unless a variable follows.
                char n = lex.peek();
                if (std::isalpha(static_cast<unsigned char>(n)) || n == '_')
                    throw ParseError("expected '*' between coefficient and variable", lex.pos);
                result.add_term(mono, coeff);
                continue;
            }
        }
        for (;;) {
            std::size_t id_pos = lex.pos;
            std::string name = lex.read_identifier();
            std::size_t var = ring->index_of(name);
            if (var == RingSpec::npos)
                throw ParseError("unknown variable '" + name + "'", id_pos);
            int exp = 1;
            if (lex.consume('^')) {
                Integer e = lex.read_integer();
                exp = static_cast<int>(e);
                if (exp < 0) throw ParseError("negative exponent", lex.pos);
            }
            mono.exponents[var] += exp;
            saw_factor = true;
            if (!lex.consume('*')) break;
        }
        if (!saw_factor) throw ParseError("empty term", lex.pos);
        result.add_term(mono, coeff);
    }
    if (first) throw ParseError("empty polynomial", 0);
    return result;
}

std::string format_monomial(const Monomial& m, const RingSpec& ring) {
    std::ostringstream os;
    bool firstv = true;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        int e = m.exponents[i];
        if (e == 0) continue;
        if (!firstv) os << "*";
        os << ring.name(i);
        if (e != 1) os << "^" << e;
        firstv = false;
    }
    if (firstv) os << "1";
    return os.str();
}

std::string format_polynomial(const Polynomial& p) {
    const RingSpec& ring = *p.ring();
    if (p.is_zero()) return "0";
    // Descending grevlex across all terms (degree first).
    std::vector<const std::pair<const Monomial, Rational>*> terms;
    for (const auto& t : p.terms()) terms.push_back(&t);
    std::sort(terms.begin(), terms.end(), [&ring](const auto* a, const auto* b) {
        return grevlex_less(b->first, a->first, ring);
    });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : terms) {
        Rational c = t->second;
        bool negative = c < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        bool is_const = t->first.total_exponent() == 0;
        if (c != 1 || is_const) {
            os << to_string(c);
            if (!is_const) os << "*";
        }
        if (!is_const) os << format_monomial(t->first, ring);
    }
    return os.str();
}

}  // namespace c2ext
