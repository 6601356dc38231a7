#include "knot.hpp"

#include "errors.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nuplus {

KnotPtr KnotExpr::unknot() {
    return std::make_shared<const KnotExpr>(Node{Unknot{}});
}

KnotPtr KnotExpr::torus(std::int64_t p, std::int64_t q) {
    if (p <= 0 || q <= 0)
        throw std::domain_error("torus parameters must be positive, got p=" + std::to_string(p) +
                                " q=" + std::to_string(q));
    if (std::gcd(p, q) != 1)
        throw std::domain_error("torus parameters must be coprime: gcd(" + std::to_string(p) +
                                "," + std::to_string(q) + ") = " +
                                std::to_string(std::gcd(p, q)));
    return std::make_shared<const KnotExpr>(Node{Torus{p, q}});
}

KnotPtr KnotExpr::cable(CableParams params, KnotPtr companion) {
    if (!companion)
        throw std::domain_error("cable requires a companion");
    return std::make_shared<const KnotExpr>(Node{Cable{params, std::move(companion)}});
}

KnotPtr KnotExpr::explicit_v(VSequence v) {
    return std::make_shared<const KnotExpr>(Node{ExplicitV{std::move(v)}});
}

bool operator==(const KnotExpr& a, const KnotExpr& b) {
    if (a.node().index() != b.node().index())
        return false;
    if (std::holds_alternative<KnotExpr::Unknot>(a.node()))
        return true;
    if (const auto* ta = std::get_if<KnotExpr::Torus>(&a.node())) {
        const auto& tb = std::get<KnotExpr::Torus>(b.node());
        return ta->p == tb.p && ta->q == tb.q;
    }
    if (const auto* ca = std::get_if<KnotExpr::Cable>(&a.node())) {
        const auto& cb = std::get<KnotExpr::Cable>(b.node());
        return ca->params.p == cb.params.p && ca->params.q == cb.params.q &&
               *ca->companion == *cb.companion;
    }
    return std::get<KnotExpr::ExplicitV>(a.node()).v == std::get<KnotExpr::ExplicitV>(b.node()).v;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    KnotPtr parse() {
        KnotPtr e = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing characters");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) { throw parse_error(what, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void expect(char c) {
        skip_ws();
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::int64_t integer() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected an unsigned integer");
        std::int64_t value = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            int digit = text_[pos_] - '0';
            if (value > (std::numeric_limits<std::int64_t>::max() - digit) / 10)
                fail("integer literal too large");
            value = value * 10 + digit;
            ++pos_;
        }
        return value;
    }

    std::string word() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            fail("expected a knot constructor");
        return std::string(text_.substr(start, pos_ - start));
    }

    KnotPtr expr() {
        skip_ws();
        std::size_t start = pos_;
        std::string name = word();
        if (name == "unknot")
            return KnotExpr::unknot();
        if (name == "torus") {
            expect('(');
            std::int64_t p = integer();
            expect(',');
            std::int64_t q = integer();
            expect(')');
            return KnotExpr::torus(p, q);
        }
        if (name == "cable") {
            expect('(');
            std::int64_t p = integer();
            expect(',');
            std::int64_t q = integer();
            expect(';');
            KnotPtr companion = expr();
            expect(')');
            return KnotExpr::cable(CableParams::make(p, q), std::move(companion));
        }
        if (name == "v") {
            expect('[');
            std::vector<std::int64_t> entries;
            entries.push_back(integer());
            skip_ws();
            while (peek() == ',') {
                ++pos_;
                entries.push_back(integer());
                skip_ws();
            }
            expect(']');
            return KnotExpr::explicit_v(VSequence(std::move(entries)));
        }
        pos_ = start;
        fail("unknown knot constructor '" + name + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

KnotPtr parse_knot_expr(std::string_view text) {
    return Parser(text).parse();
}

std::string render(const KnotExpr& e) {
    std::ostringstream os;
    if (std::holds_alternative<KnotExpr::Unknot>(e.node())) {
        os << "unknot";
    } else if (const auto* t = std::get_if<KnotExpr::Torus>(&e.node())) {
        os << "torus(" << t->p << "," << t->q << ")";
    } else if (const auto* c = std::get_if<KnotExpr::Cable>(&e.node())) {
        os << "cable(" << c->params.p << "," << c->params.q << "; " << render(*c->companion)
           << ")";
    } else {
        os << "v[" << std::get<KnotExpr::ExplicitV>(e.node()).v.str() << "]";
    }
    return os.str();
}

VSequence KnotEval::vsequence() const {
    if (!complete)
        throw std::domain_error("evaluation is incomplete: nu^+ is only bounded below by " +
                                std::to_string(nu));
    return VSequence(v_prefix);
}

namespace {

std::string cable_tag(CableParams params) {
    return "cable(" + std::to_string(params.p) + "," + std::to_string(params.q) + ")";
}

KnotEval eval_cable(const KnotExpr::Cable& c) {
    KnotEval sub = eval_knot(*c.companion);
    CableParams params = c.params;
    KnotEval out;
    out.notes = sub.notes;

    if (!sub.complete) {
        // The companion's V-values are unknown; the strongest statement is a
        // positivity scan against a companion that is positive below sub.nu.
        std::vector<std::int64_t> synthetic(static_cast<std::size_t>(sub.nu), 1);
        synthetic.push_back(0);
        CablePrefix scan = cable_v(VSequence(std::move(synthetic)), params);
        out.complete = false;
        out.nu = scan.nu_plus_lower_bound();
        out.notes.push_back(cable_tag(params) +
                            ": companion evaluation incomplete (nu+ >= " +
                            std::to_string(sub.nu) + "); values unavailable, nu+ >= " +
                            std::to_string(out.nu));
        return out;
    }

    VSequence vk = sub.vsequence();
    CablePrefix pref = cable_v(vk, params);
    out.v_prefix = pref.values;
    out.complete = pref.complete;
    out.nu = pref.nu_plus_lower_bound();

    if (params.p == 1) {
        out.notes.push_back(cable_tag(params) + ": (1,q)-cable is the companion itself");
        return out;
    }

    std::int64_t nu_k = sub.nu;
    __int128 margin = (__int128)params.q - ((__int128)2 * nu_k - 1) * params.p;
    if (margin >= 1) {
        CableNu formula = nu_plus_cable(nu_k, params);
        if (!pref.complete || pref.nu_plus() != formula.value)
            throw inconsistency_error(cable_tag(params) +
                                      ": window and closed formula disagree in the "
                                      "proof-backed regime");
        out.notes.push_back(cable_tag(params) + ": proof-backed regime, nu+ = " +
                            std::to_string(params.p) + "*" + std::to_string(nu_k) + " + " +
                            std::to_string(params.genus_term()) + " = " +
                            std::to_string(formula.value));
    } else if (margin >= -1) {
        CableNu formula = nu_plus_cable(nu_k, params);
        out.notes.push_back(cable_tag(params) + ": " + regime_name(formula.regime) +
                            " regime, stated value " + std::to_string(formula.value) +
                            "; window gives nu+ >= " + std::to_string(out.nu));
    } else {
        out.notes.push_back(cable_tag(params) + ": below the closed-formula regime" +
                            "; bound ceil(pq/2) = " +
                            std::to_string(nu_plus_cable_lower_bound(nu_k, params)) +
                            ", window gives nu+ >= " + std::to_string(out.nu));
    }
    return out;
}

} // namespace

KnotEval eval_knot(const KnotExpr& e) {
    if (std::holds_alternative<KnotExpr::Unknot>(e.node()))
        return KnotEval{{0}, true, 0, {}};
    if (const auto* t = std::get_if<KnotExpr::Torus>(&e.node())) {
        VSequence v = v_torus(t->p, t->q);
        auto vals = v.values();
        return KnotEval{{vals.begin(), vals.end()}, true, v.nu_plus(), {}};
    }
    if (const auto* x = std::get_if<KnotExpr::ExplicitV>(&e.node())) {
        auto vals = x->v.values();
        return KnotEval{{vals.begin(), vals.end()}, true, x->v.nu_plus(), {}};
    }
    return eval_cable(std::get<KnotExpr::Cable>(e.node()));
}

} // namespace nuplus
