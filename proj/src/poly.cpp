#include "lagmul/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace lagmul {

Monomial::Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {
    deg_ = std::accumulate(e_.begin(), e_.end(), std::uint32_t{0});
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.e_.resize(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    r.deg_ = deg_ + o.deg_;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::divide_into(const Monomial& numerator) const {
    Monomial r;
    r.e_.resize(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i)
        r.e_[i] = numerator.e_[i] - e_[i];
    r.deg_ = numerator.deg_ - deg_;
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.e_.resize(a.e_.size());
    for (std::size_t i = 0; i < a.e_.size(); ++i)
        r.e_[i] = std::max(a.e_[i], b.e_[i]);
    r.deg_ = std::accumulate(r.e_.begin(), r.e_.end(), std::uint32_t{0});
    return r;
}

bool Monomial::coprime_with(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > 0 && o.e_[i] > 0) return false;
    return true;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    switch (kind) {
        case OrderKind::lex:
            for (std::size_t i = 0; i < ea.size(); ++i) {
                if (ea[i] != eb[i]) return ea[i] > eb[i] ? 1 : -1;
            }
            return 0;
        case OrderKind::grlex:
            if (a.total_degree() != b.total_degree())
                return a.total_degree() > b.total_degree() ? 1 : -1;
            for (std::size_t i = 0; i < ea.size(); ++i) {
                if (ea[i] != eb[i]) return ea[i] > eb[i] ? 1 : -1;
            }
            return 0;
        case OrderKind::degrevlex:
            if (a.total_degree() != b.total_degree())
                return a.total_degree() > b.total_degree() ? 1 : -1;
            for (std::size_t i = ea.size(); i-- > 0;) {
                if (ea[i] != eb[i]) return ea[i] < eb[i] ? 1 : -1;
            }
            return 0;
    }
    return 0;
}

OrderKind order_kind_from_string(const std::string& s) {
    if (s == "degrevlex") return OrderKind::degrevlex;
    if (s == "grlex") return OrderKind::grlex;
    if (s == "lex") return OrderKind::lex;
    throw Error("unknown monomial order '" + s + "'");
}

std::string to_string(OrderKind k) {
    switch (k) {
        case OrderKind::degrevlex: return "degrevlex";
        case OrderKind::grlex: return "grlex";
        case OrderKind::lex: return "lex";
    }
    return "?";
}

RingPtr make_ring(Field field, std::vector<std::string> vars,
                  MonomialOrder order) {
    return std::make_shared<Ring>(Ring{field, std::move(vars), order});
}

RingPtr prepend_x0(const RingPtr& ring) {
    std::vector<std::string> vars;
    vars.reserve(ring->nvars() + 1);
    vars.push_back("x0");
    vars.insert(vars.end(), ring->vars.begin(), ring->vars.end());
    return make_ring(ring->field, std::move(vars), ring->order);
}

RingPtr append_vars(const RingPtr& ring,
                    const std::vector<std::string>& extra) {
    std::vector<std::string> vars = ring->vars;
    vars.insert(vars.end(), extra.begin(), extra.end());
    return make_ring(ring->field, std::move(vars), ring->order);
}

RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
    return make_ring(ring->field, ring->vars, order);
}

Polynomial Polynomial::zero(const RingPtr& ring) {
    Polynomial p;
    p.ring_ = ring;
    return p;
}

Polynomial Polynomial::constant(const RingPtr& ring, std::int64_t c) {
    return constant(ring, FieldElement(ring->field, c));
}

Polynomial Polynomial::constant(const RingPtr& ring, const FieldElement& c) {
    Polynomial p;
    p.ring_ = ring;
    if (!c.is_zero()) p.terms_.push_back({Monomial(ring->nvars()), c});
    return p;
}

Polynomial Polynomial::variable(const RingPtr& ring, std::size_t index) {
    std::vector<std::uint32_t> e(ring->nvars(), 0);
    e.at(index) = 1;
    Polynomial p;
    p.ring_ = ring;
    p.terms_.push_back({Monomial(std::move(e)), FieldElement(ring->field, 1)});
    return p;
}

Polynomial Polynomial::monomial_term(const RingPtr& ring, Monomial m,
                                     FieldElement c) {
    Polynomial p;
    p.ring_ = ring;
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

Polynomial Polynomial::from_terms(const RingPtr& ring,
                                  std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return ring->order.greater(a.mono, b.mono);
    });
    Polynomial p;
    p.ring_ = ring;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

std::uint32_t Polynomial::total_degree() const {
    if (terms_.empty()) throw ZeroPolynomial("degree");
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw ZeroPolynomial("leading term");
    return terms_.front();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (!ring_->same_ambient(*o.ring_)) throw MixedRings();
    Polynomial r;
    r.ring_ = ring_;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    const auto& ord = ring_->order;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ord.compare(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            FieldElement s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, s});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    r.ring_ = ring_;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + (-o);
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
    if (c.is_zero()) return zero(ring_);
    Polynomial r;
    r.ring_ = ring_;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
    return r;
}

Polynomial Polynomial::times_term(const Monomial& m,
                                  const FieldElement& c) const {
    if (c.is_zero()) return zero(ring_);
    Polynomial r;
    r.ring_ = ring_;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (!ring_->same_ambient(*o.ring_)) throw MixedRings();
    const auto& ord = ring_->order;
    auto cmp = [&ord](const Monomial& a, const Monomial& b) {
        return ord.greater(a, b);
    };
    std::map<Monomial, FieldElement, decltype(cmp)> acc(cmp);
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Monomial m = a.mono * b.mono;
            FieldElement c = a.coeff * b.coeff;
            auto [it, inserted] = acc.try_emplace(std::move(m), c);
            if (!inserted) it->second += c;
        }
    }
    Polynomial r;
    r.ring_ = ring_;
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.terms_.push_back({m, c});
    return r;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
    Polynomial r = constant(ring_, 1);
    Polynomial base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!ring_ || !o.ring_) return terms_.empty() && o.terms_.empty();
    if (!ring_->same_ambient(*o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].mono != o.terms_[i].mono ||
            terms_[i].coeff != o.terms_[i].coeff)
            return false;
    }
    return true;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        std::uint32_t e = t.mono.exp(var);
        if (e == 0) continue;
        FieldElement c =
            t.coeff * FieldElement(ring_->field, static_cast<std::int64_t>(e));
        if (c.is_zero()) continue;
        auto exps = t.mono.exponents();
        exps[var] -= 1;
        out.push_back({Monomial(std::move(exps)), c});
    }
    return from_terms(ring_, std::move(out));
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    std::uint32_t d = terms_.front().mono.total_degree();
    for (const auto& t : terms_)
        if (t.mono.total_degree() != d) return false;
    return true;
}

Polynomial Polynomial::homogeneous_component(std::uint32_t d) const {
    std::vector<Term> out;
    for (const auto& t : terms_)
        if (t.mono.total_degree() == d) out.push_back(t);
    return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::leading_form() const {
    if (terms_.empty()) throw ZeroPolynomial("leading form");
    return homogeneous_component(total_degree());
}

Polynomial Polynomial::homogenize() const {
    if (terms_.empty()) throw ZeroPolynomial("homogenization");
    std::uint32_t d = total_degree();
    RingPtr target = prepend_x0(ring_);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::vector<std::uint32_t> e;
        e.reserve(t.mono.nvars() + 1);
        e.push_back(d - t.mono.total_degree());
        e.insert(e.end(), t.mono.exponents().begin(), t.mono.exponents().end());
        out.push_back({Monomial(std::move(e)), t.coeff});
    }
    return from_terms(target, std::move(out));
}

FieldElement Polynomial::coefficient_of(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return FieldElement(ring_->field, 0);
}

Polynomial Polynomial::monic() const {
    return scaled(leading_term().coeff.inv());
}

Polynomial Polynomial::in_ring(const RingPtr& target,
                               std::size_t offset) const {
    if (!(ring_->field == target->field)) throw MixedRings();
    if (ring_->nvars() + offset > target->nvars())
        throw MixedRings();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::vector<std::uint32_t> e(target->nvars(), 0);
        for (std::size_t i = 0; i < t.mono.nvars(); ++i)
            e[i + offset] = t.mono.exp(i);
        out.push_back({Monomial(std::move(e)), t.coeff});
    }
    return from_terms(target, std::move(out));
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (images.size() != ring_->nvars())
        throw MixedRings();
    RingPtr target = images.empty() ? ring_ : images.front().ring();
    // per-variable power cache
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power = [&](std::size_t v, std::uint32_t e) -> const Polynomial& {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
        while (cache.size() <= e)
            cache.push_back(cache.back() * images[v]);
        return cache[e];
    };
    Polynomial acc = Polynomial::zero(target);
    for (const auto& t : terms_) {
        Polynomial prod = Polynomial::constant(target, t.coeff);
        for (std::size_t v = 0; v < images.size(); ++v) {
            std::uint32_t e = t.mono.exp(v);
            if (e) prod = prod * power(v, e);
        }
        acc += prod;
    }
    return acc;
}

FieldElement Polynomial::evaluate(std::span<const FieldElement> point) const {
    if (point.size() != ring_->nvars()) throw MixedRings();
    FieldElement acc(ring_->field, 0);
    for (const auto& t : terms_) {
        FieldElement v = t.coeff;
        for (std::size_t i = 0; i < point.size(); ++i) {
            std::uint32_t e = t.mono.exp(i);
            FieldElement b = point[i];
            while (e) {
                if (e & 1) v *= b;
                b *= b;
                e >>= 1;
            }
        }
        acc += v;
    }
    return acc;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        std::string c = t.coeff.to_string();
        bool neg = !c.empty() && c[0] == '-';
        if (first) {
            if (neg) {
                os << "-";
                c = c.substr(1);
            }
        } else {
            os << (neg ? " - " : " + ");
            if (neg) c = c.substr(1);
        }
        first = false;
        bool printed_coeff = false;
        if (t.mono.is_one() || c != "1") {
            os << c;
            printed_coeff = true;
        }
        bool any_var = false;
        for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
            std::uint32_t e = t.mono.exp(i);
            if (e == 0) continue;
            if (printed_coeff || any_var) os << "*";
            os << ring_->vars[i];
            if (e > 1) os << "^" << e;
            any_var = true;
        }
    }
    return os.str();
}

bool euler_check(const Polynomial& g) {
    if (!g.is_homogeneous()) throw NotHomogeneous("euler_check");
    const RingPtr& ring = g.ring();
    if (g.is_zero()) return true;
    std::uint32_t d = g.total_degree();
    Polynomial lhs = Polynomial::zero(ring);
    for (std::size_t j = 0; j < ring->nvars(); ++j)
        lhs += Polynomial::variable(ring, j) * g.derivative(j);
    Polynomial rhs =
        g.scaled(FieldElement(ring->field, static_cast<std::int64_t>(d)));
    return lhs == rhs;
}

namespace {

void monomials_rec(std::size_t nvars, std::size_t var, std::uint32_t remaining,
                   std::vector<std::uint32_t>& cur,
                   std::vector<Monomial>& out) {
    if (var + 1 == nvars) {
        cur[var] = remaining;
        out.emplace_back(cur);
        cur[var] = 0;
        return;
    }
    for (std::uint32_t e = 0; e <= remaining; ++e) {
        cur[var] = e;
        monomials_rec(nvars, var + 1, remaining - e, cur, out);
    }
    cur[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t d) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (d == 0) out.emplace_back(std::size_t{0});
        return out;
    }
    std::vector<std::uint32_t> cur(nvars, 0);
    monomials_rec(nvars, 0, d, cur, out);
    return out;
}

// ---------------------------------------------------------------------------
// polynomial text parser

namespace {

struct PolyParser {
    const std::string& s;
    const RingPtr& ring;
    int line;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg, line, static_cast<int>(pos) + 1);
    }

    void skip_ws() {
        while (pos < s.size() &&
               std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    Polynomial parse_expr() {
        Polynomial acc;
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+')) {
                acc += parse_term();
            } else if (eat('-')) {
                acc -= parse_term();
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (eat('*')) acc = acc * parse_factor();
        // implicit multiplication like `2x1` is a syntax error
        char c = peek();
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
            c == '(')
            fail("missing '*' (no implicit multiplication)");
        return acc;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_base();
        if (eat('^')) {
            std::uint32_t e = parse_nat();
            return base.pow(e);
        }
        return base;
    }

    std::uint32_t parse_nat() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected exponent");
        std::uint64_t v = 0;
        while (pos < s.size() &&
               std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
            if (v > 1000000) fail("exponent too large");
            ++pos;
        }
        return static_cast<std::uint32_t>(v);
    }

    Polynomial parse_base() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Polynomial e = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (c == '-') {
            ++pos;
            return -parse_factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt v = 0;
            while (pos < s.size() &&
                   std::isdigit(static_cast<unsigned char>(s[pos]))) {
                v = v * 10 + (s[pos] - '0');
                ++pos;
            }
            return Polynomial::constant(ring,
                                        FieldElement(ring->field, Rational(v)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                    s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            auto it = std::find(ring->vars.begin(), ring->vars.end(), name);
            if (it == ring->vars.end()) fail("unknown variable '" + name + "'");
            return Polynomial::variable(
                ring, static_cast<std::size_t>(it - ring->vars.begin()));
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring,
                            int line) {
    PolyParser p{text, ring, line};
    Polynomial r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

}  // namespace lagmul
