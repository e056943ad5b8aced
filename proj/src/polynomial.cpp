#include "lss/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace lss {

Monomial Monomial::var(Variable v, int exp) {
    Monomial m;
    if (exp > 0) m.factors_.push_back({v, exp});
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

int Monomial::exponent_of(Variable v) const {
    for (const auto& [w, e] : factors_)
        if (w == v) return e;
    return 0;
}

bool Monomial::involves_row(int i) const {
    for (const auto& [v, e] : factors_)
        if (v.i == i) return true;
    return false;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial out;
    auto a = factors_.begin(), b = o.factors_.begin();
    while (a != factors_.end() || b != o.factors_.end()) {
        if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first))
            out.factors_.push_back(*a++);
        else if (a == factors_.end() || b->first < a->first)
            out.factors_.push_back(*b++);
        else {
            out.factors_.push_back({a->first, a->second + b->second});
            ++a;
            ++b;
        }
    }
    return out;
}

bool Monomial::grlex_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // Same degree: the monomial with the larger exponent on the earliest
    // variable is the larger one.
    auto ia = a.factors_.begin(), ib = b.factors_.begin();
    while (ia != a.factors_.end() && ib != b.factors_.end()) {
        if (ia->first != ib->first)
            // The side holding the earlier variable has positive exponent
            // there while the other has zero, so it is larger.
            return !(ia->first < ib->first);
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia;
        ++ib;
    }
    return false; // equal (both exhausted, since degrees match)
}

Polynomial Polynomial::constant(BigInt c) {
    Polynomial p;
    if (c != 0) p.terms_.push_back({Monomial{}, std::move(c)});
    return p;
}

Polynomial Polynomial::var(Variable v) {
    Polynomial p;
    p.terms_.push_back({Monomial::var(v), BigInt(1)});
    return p;
}

int Polynomial::degree() const {
    return terms_.empty() ? -1 : terms_.front().first.degree();
}

bool Polynomial::involves_row(int i) const {
    for (const auto& [m, c] : terms_)
        if (m.involves_row(i)) return true;
    return false;
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
        return Monomial::grlex_less(b.first, a.first); // descending
    });
    std::vector<Term> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().first == t.first)
            merged.back().second += t.second;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const Term& t) { return t.second == 0; });
    terms_ = std::move(merged);
}

Polynomial from_terms(std::vector<Polynomial::Term> terms) {
    Polynomial p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Term> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return from_terms(std::move(all));
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            prod.push_back({ma * mb, ca * cb});
    return from_terms(std::move(prod));
}

Polynomial Polynomial::canonicalized() const {
    if (terms_.empty()) return {};
    BigInt content = 0;
    for (const auto& [m, c] : terms_)
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (terms_.front().second < 0) content = -content;
    Polynomial p = *this;
    for (auto& [m, c] : p.terms_) c /= content;
    return p;
}

Rational Polynomial::evaluate(
    const std::function<Rational(Variable)>& value_of) const {
    Rational sum = 0;
    for (const auto& [m, c] : terms_) {
        Rational prod = Rational(c);
        for (const auto& [v, e] : m.factors()) {
            Rational val = value_of(v);
            for (int k = 0; k < e; ++k) prod *= val;
        }
        sum += prod;
    }
    return sum;
}

std::string Polynomial::to_string(
    const std::function<std::string(Variable)>& name_of) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        BigInt abs_c = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? "-" : "+");
        }
        first = false;
        bool coeff_shown = false;
        if (abs_c != 1 || m.factors().empty()) {
            os << abs_c.get_str();
            coeff_shown = true;
        }
        for (const auto& [v, e] : m.factors()) {
            if (coeff_shown || &v != &m.factors().front().first) os << "*";
            os << name_of(v);
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

bool operator<(const Polynomial& a, const Polynomial& b) {
    return std::lexicographical_compare(
        a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
        [](const Polynomial::Term& x, const Polynomial::Term& y) {
            if (x.first != y.first) return Monomial::grlex_less(x.first, y.first);
            return x.second < y.second;
        });
}

} // namespace lss
