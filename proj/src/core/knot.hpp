#pragma once

#include "cabling.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace nuplus {

class KnotExpr;
using KnotPtr = std::shared_ptr<const KnotExpr>;

// Expression tree over the knot constructors the evaluation pipeline
// understands: the unknot, torus knots, cables, and explicit V-sequences.
class KnotExpr {
public:
    struct Unknot {};
    struct Torus {
        std::int64_t p, q;
    };
    struct Cable {
        CableParams params;
        KnotPtr companion;
    };
    struct ExplicitV {
        VSequence v;
    };
    using Node = std::variant<Unknot, Torus, Cable, ExplicitV>;

    static KnotPtr unknot();
    static KnotPtr torus(std::int64_t p, std::int64_t q);          // validates coprimality
    static KnotPtr cable(CableParams params, KnotPtr companion);
    static KnotPtr explicit_v(VSequence v);

    const Node& node() const { return node_; }

    explicit KnotExpr(Node n) : node_(std::move(n)) {}

private:
    Node node_;
};

bool operator==(const KnotExpr& a, const KnotExpr& b);

// Grammar (whitespace-insensitive):
//   expr := "unknot" | "torus" "(" int "," int ")"
//         | "cable" "(" int "," int ";" expr ")" | "v" "[" int { "," int } "]"
// Syntax errors raise parse_error with the offending position; semantic
// errors (non-coprime parameters, malformed V-lists) raise domain errors.
KnotPtr parse_knot_expr(std::string_view text);

// Canonical text for an expression; parses back to an equal tree.
std::string render(const KnotExpr& e);

// Result of evaluating a knot expression bottom-up. When complete, v_prefix
// is the full V-sequence (ending in its first zero) and nu is nu^+; when
// incomplete, nu is a lower bound and v_prefix holds whatever window prefix
// is known (possibly empty if a companion was already incomplete).
struct KnotEval {
    std::vector<std::int64_t> v_prefix;
    bool complete = false;
    std::int64_t nu = 0;
    std::vector<std::string> notes;  // regime provenance, one entry per cable level

    VSequence vsequence() const;  // requires complete
};

KnotEval eval_knot(const KnotExpr& e);

} // namespace nuplus
