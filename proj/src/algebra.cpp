#include "qplane/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace qplane {

namespace {

constexpr std::array<const char*, kGenCount> kGenNames = {
    "theta", "phi", "dx", "dy", "x", "xi", "y", "K", "Ki", "X",
};

constexpr std::array<int, kGenCount> kGenDegrees = {1, 1, 1, 1, 0, 0, 0, 0, 0, 0};

QScalar qp(int k) { return QScalar::q_power(k); }

} // namespace

int gen_index(Gen g) { return static_cast<int>(g); }

int gen_degree(Gen g) { return kGenDegrees[static_cast<std::size_t>(g)]; }

const char* gen_name(Gen g) { return kGenNames[static_cast<std::size_t>(g)]; }

std::optional<Gen> gen_from_name(std::string_view name) {
    for (int i = 0; i < kGenCount; ++i) {
        if (name == kGenNames[static_cast<std::size_t>(i)]) return static_cast<Gen>(i);
    }
    return std::nullopt;
}

int word_degree(const Word& w) {
    int d = 0;
    for (Gen g : w) d += gen_degree(g);
    return d;
}

bool word_less(const Word& a, const Word& b) {
    int da = word_degree(a);
    int db = word_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Presentation::Presentation(std::string name, std::vector<Gen> generators,
                           std::vector<RewriteRule> rules,
                           std::vector<std::pair<Gen, Gen>> inverse_pairs)
    : name_(std::move(name)),
      gens_(std::move(generators)),
      rules_(std::move(rules)),
      inv_(std::move(inverse_pairs)) {
    for (Gen g : gens_) member_[static_cast<std::size_t>(gen_index(g))] = true;
    for (std::size_t i = 0; i < rules_.size(); ++i) {
        const RewriteRule& r = rules_[i];
        int a = gen_index(r.a);
        int b = gen_index(r.b);
        if (table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0) {
            throw std::logic_error("duplicate rewrite rule for " +
                                   std::string(gen_name(r.a)) + "." + gen_name(r.b));
        }
        table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
            static_cast<int>(i) + 1;
    }
}

const RewriteRule* Presentation::rule_for(Gen a, Gen b) const {
    int idx = table_[static_cast<std::size_t>(gen_index(a))]
                    [static_cast<std::size_t>(gen_index(b))];
    if (idx == 0) return nullptr;
    return &rules_[static_cast<std::size_t>(idx - 1)];
}

std::optional<Gen> Presentation::inverse_of(Gen g) const {
    for (const auto& [u, v] : inv_) {
        if (u == g) return v;
        if (v == g) return u;
    }
    return std::nullopt;
}

bool Presentation::word_is_canonical(const Word& w) const {
    for (Gen g : w) {
        if (!contains(g)) return false;
    }
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (rule_for(w[i], w[i + 1]) != nullptr) return false;
    }
    return true;
}

void Presentation::validate() const {
    for (Gen g : gens_) {
        if (std::count(gens_.begin(), gens_.end(), g) != 1) {
            throw std::logic_error("generator listed twice: " + std::string(gen_name(g)));
        }
    }
    for (const RewriteRule& r : rules_) {
        if (!contains(r.a) || !contains(r.b)) {
            throw std::logic_error("rule over foreign generators in " + name_);
        }
        int lhs_degree = gen_degree(r.a) + gen_degree(r.b);
        Word lhs = {r.a, r.b};
        for (const RuleTerm& t : r.rhs) {
            if (t.coeff.is_zero()) {
                throw std::logic_error("zero coefficient on a rule right-hand side");
            }
            if (!word_is_canonical(t.word)) {
                throw std::logic_error("rule right-hand side not canonical in " + name_);
            }
            if (word_degree(t.word) != lhs_degree) {
                throw std::logic_error("rule does not preserve degree in " + name_);
            }
            if (!word_less(t.word, lhs) && t.word != lhs) {
                throw std::logic_error("rule right-hand side does not shrink in " + name_);
            }
            if (t.word == lhs) {
                throw std::logic_error("rule rewrites a word to itself in " + name_);
            }
        }
    }
    for (const auto& [u, v] : inv_) {
        const RewriteRule* uv = rule_for(u, v);
        const RewriteRule* vu = rule_for(v, u);
        bool uv_unit = uv != nullptr && uv->rhs.size() == 1 && uv->rhs[0].word.empty() &&
                       uv->rhs[0].coeff.is_one();
        bool vu_unit = vu != nullptr && vu->rhs.size() == 1 && vu->rhs[0].word.empty() &&
                       vu->rhs[0].coeff.is_one();
        if (!uv_unit || !vu_unit) {
            throw std::logic_error("inverse pair without cancellation rules in " + name_);
        }
    }
}

Presentation make_presentation_A() {
    using enum Gen;
    std::vector<RewriteRule> rules;
    rules.push_back({y, x, {{qp(-1), {x, y}}}});
    rules.push_back({x, xi, {{QScalar(1), {}}}});
    rules.push_back({xi, x, {{QScalar(1), {}}}});
    rules.push_back({y, xi, {{qp(1), {xi, y}}}});
    return Presentation("A", {x, xi, y}, std::move(rules), {{x, xi}});
}

Presentation make_presentation_gamma() {
    using enum Gen;
    std::vector<RewriteRule> rules;
    rules.push_back({y, x, {{qp(-1), {x, y}}}});
    rules.push_back({x, xi, {{QScalar(1), {}}}});
    rules.push_back({xi, x, {{QScalar(1), {}}}});
    rules.push_back({y, xi, {{qp(1), {xi, y}}}});
    rules.push_back({x, dx, {{qp(-1), {dx, x}}}});
    rules.push_back({x, dy, {{QScalar(1), {dy, x}}}});
    rules.push_back({y, dx, {{qp(-1), {dx, y}}, {qp(-1) - QScalar(1), {dy, x}}}});
    rules.push_back({y, dy, {{qp(-1), {dy, y}}}});
    rules.push_back({xi, dx, {{qp(1), {dx, xi}}}});
    rules.push_back({xi, dy, {{QScalar(1), {dy, xi}}}});
    rules.push_back({dx, dx, {}});
    rules.push_back({dy, dx, {{QScalar(-1), {dx, dy}}}});
    rules.push_back({dy, dy, {}});
    return Presentation("gamma", {dx, dy, x, xi, y}, std::move(rules), {{x, xi}});
}

Presentation make_presentation_omega() {
    using enum Gen;
    std::vector<RewriteRule> rules;
    rules.push_back({y, x, {{qp(-1), {x, y}}}});
    rules.push_back({x, xi, {{QScalar(1), {}}}});
    rules.push_back({xi, x, {{QScalar(1), {}}}});
    rules.push_back({y, xi, {{qp(1), {xi, y}}}});
    rules.push_back({x, theta, {{qp(-1), {theta, x}}}});
    rules.push_back({y, theta, {{qp(-1), {theta, y}}, {qp(-1) - QScalar(1), {phi}}}});
    rules.push_back({x, phi, {{QScalar(1), {phi, x}}}});
    rules.push_back({y, phi, {{QScalar(1), {phi, y}}}});
    rules.push_back({xi, theta, {{qp(1), {theta, xi}}}});
    rules.push_back({xi, phi, {{QScalar(1), {phi, xi}}}});
    rules.push_back({theta, theta, {}});
    rules.push_back({phi, theta, {{-qp(-1), {theta, phi}}}});
    rules.push_back({phi, phi, {}});
    return Presentation("omega", {theta, phi, x, xi, y}, std::move(rules), {{x, xi}});
}

Presentation make_presentation_borel() {
    using enum Gen;
    std::vector<RewriteRule> rules;
    rules.push_back({X, K, {{qp(-1), {K, X}}}});
    rules.push_back({K, Ki, {{QScalar(1), {}}}});
    rules.push_back({Ki, K, {{QScalar(1), {}}}});
    rules.push_back({X, Ki, {{qp(1), {Ki, X}}}});
    return Presentation("borel", {K, Ki, X}, std::move(rules), {{K, Ki}});
}

namespace {

const Presentation& singleton_A() {
    static const Presentation p = make_presentation_A();
    return p;
}

const Presentation& singleton_gamma() {
    static const Presentation p = make_presentation_gamma();
    return p;
}

const Presentation& singleton_omega() {
    static const Presentation p = make_presentation_omega();
    return p;
}

const Presentation& singleton_borel() {
    static const Presentation p = make_presentation_borel();
    return p;
}

} // namespace

const Presentation& presentation_A() { return singleton_A(); }
const Presentation& presentation_gamma() { return singleton_gamma(); }
const Presentation& presentation_omega() { return singleton_omega(); }
const Presentation& presentation_borel() { return singleton_borel(); }

const Presentation* presentation_by_name(std::string_view name) {
    if (name == "A") return &presentation_A();
    if (name == "gamma") return &presentation_gamma();
    if (name == "omega") return &presentation_omega();
    if (name == "borel") return &presentation_borel();
    return nullptr;
}

Element Element::unit(const Presentation& p) {
    Element e(p);
    e.terms_.emplace(Word{}, QScalar(1));
    return e;
}

Element Element::generator(const Presentation& p, Gen g) {
    if (!p.contains(g)) {
        throw std::invalid_argument(std::string("generator ") + gen_name(g) +
                                    " does not belong to presentation " + p.name());
    }
    Element e(p);
    e.terms_.emplace(Word{g}, QScalar(1));
    return e;
}

Element Element::from_word(const Presentation& p, Word w, QScalar coeff) {
    return normalize_terms(p, {{std::move(coeff), std::move(w)}});
}

Element& Element::operator+=(const Element& other) {
    if (pres_ != other.pres_) {
        throw std::invalid_argument("cannot add elements of different presentations");
    }
    for (const auto& [w, c] : other.terms_) {
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

Element& Element::operator-=(const Element& other) {
    return *this += (-other);
}

Element Element::operator-() const {
    Element r(*pres_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

Element operator*(const QScalar& c, const Element& e) { return scale(c, e); }

namespace {

constexpr long kRewriteBudget = 1'000'000;

// One full reduction of (coeff, word) to canonical form. Pushes the
// resulting canonical terms into out. Leftmost-innermost strategy: scan for
// the first adjacent pair carrying a rule, splice the right-hand sides in,
// rescan from just before the splice point.
void reduce_term(const Presentation& p, QScalar coeff, Word word,
                 std::map<Word, QScalar, WordOrder>& out) {
    for (Gen g : word) {
        if (!p.contains(g)) {
            throw std::invalid_argument(std::string("generator ") + gen_name(g) +
                                        " does not belong to presentation " + p.name());
        }
    }
    std::vector<RawTerm> stack;
    stack.emplace_back(std::move(coeff), std::move(word));
    long steps = 0;
    while (!stack.empty()) {
        auto [c, w] = std::move(stack.back());
        stack.pop_back();
        if (c.is_zero()) continue;
        std::size_t i = 0;
        const RewriteRule* rule = nullptr;
        while (i + 1 < w.size()) {
            rule = p.rule_for(w[i], w[i + 1]);
            if (rule != nullptr) break;
            ++i;
        }
        if (rule == nullptr) {
            auto it = out.find(w);
            if (it == out.end()) {
                out.emplace(std::move(w), std::move(c));
            } else {
                it->second += c;
                if (it->second.is_zero()) out.erase(it);
            }
            continue;
        }
        if (++steps > kRewriteBudget) {
            throw std::runtime_error("rewrite budget exceeded in presentation " + p.name() +
                                     ": rule table appears non-terminating");
        }
        for (const RuleTerm& t : rule->rhs) {
            Word next;
            next.reserve(w.size() - 2 + t.word.size());
            next.insert(next.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
            next.insert(next.end(), t.word.begin(), t.word.end());
            next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
            stack.emplace_back(c * t.coeff, std::move(next));
        }
    }
}

} // namespace

Element normalize_terms(const Presentation& p, std::vector<RawTerm> raw) {
    Element result(p);
    for (auto& [c, w] : raw) {
        reduce_term(p, std::move(c), std::move(w), result.terms_);
    }
    return result;
}

Element normalize(const Element& e) {
    std::vector<RawTerm> raw;
    raw.reserve(e.terms().size());
    for (const auto& [w, c] : e.terms()) raw.emplace_back(c, w);
    return normalize_terms(e.presentation(), std::move(raw));
}

Element add(const Element& a, const Element& b) { return a + b; }

Element scale(const QScalar& c, const Element& e) {
    std::vector<RawTerm> raw;
    raw.reserve(e.terms().size());
    for (const auto& [w, k] : e.terms()) raw.emplace_back(c * k, w);
    return normalize_terms(e.presentation(), std::move(raw));
}

Element multiply(const Element& a, const Element& b) {
    if (&a.presentation() != &b.presentation()) {
        throw std::invalid_argument("cannot multiply elements of different presentations");
    }
    std::vector<RawTerm> raw;
    raw.reserve(a.terms().size() * b.terms().size());
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            Word w;
            w.reserve(wa.size() + wb.size());
            w.insert(w.end(), wa.begin(), wa.end());
            w.insert(w.end(), wb.begin(), wb.end());
            raw.emplace_back(ca * cb, std::move(w));
        }
    }
    return normalize_terms(a.presentation(), std::move(raw));
}

std::optional<int> degree_of(const Element& e) {
    if (e.is_zero()) return 0;
    std::optional<int> d;
    for (const auto& [w, c] : e.terms()) {
        int wd = word_degree(w);
        if (!d) {
            d = wd;
        } else if (*d != wd) {
            return std::nullopt;
        }
    }
    return d;
}

Element classical_limit(const Element& e) {
    if (&e.presentation() != &presentation_A()) {
        throw std::invalid_argument("classical_limit is defined on the coordinate algebra A");
    }
    std::vector<RawTerm> raw;
    for (const auto& [w, c] : e.terms()) {
        for (Gen g : w) {
            if (g == Gen::xi) {
                throw std::domain_error(
                    "classical_limit rejects elements involving x^-1");
            }
        }
        Rational v = c.eval_at(Rational(1));
        if (v == 0) continue;
        raw.emplace_back(QScalar(Rational(v)), w);
    }
    return normalize_terms(presentation_A(), std::move(raw));
}

ConfluenceReport check_local_confluence(const Presentation& p, int max_overlap_len) {
    if (max_overlap_len < 3) {
        throw std::invalid_argument("max_overlap_len must be at least 3");
    }
    ConfluenceReport report;
    report.presentation = p.name();
    for (Gen g1 : p.generators()) {
        for (Gen g2 : p.generators()) {
            const RewriteRule* left = p.rule_for(g1, g2);
            if (left == nullptr) continue;
            for (Gen g3 : p.generators()) {
                const RewriteRule* right = p.rule_for(g2, g3);
                if (right == nullptr) continue;
                Word overlap = {g1, g2, g3};
                std::vector<RawTerm> via_left;
                for (const RuleTerm& t : left->rhs) {
                    Word w = t.word;
                    w.push_back(g3);
                    via_left.emplace_back(t.coeff, std::move(w));
                }
                std::vector<RawTerm> via_right;
                for (const RuleTerm& t : right->rhs) {
                    Word w;
                    w.reserve(t.word.size() + 1);
                    w.push_back(g1);
                    w.insert(w.end(), t.word.begin(), t.word.end());
                    via_right.emplace_back(t.coeff, std::move(w));
                }
                CriticalPairResult pair{
                    overlap,
                    normalize_terms(p, std::move(via_left)),
                    normalize_terms(p, std::move(via_right)),
                    false,
                };
                pair.convergent = pair.left_normal_form == pair.right_normal_form;
                if (!pair.convergent) ++report.divergent_count;
                report.pairs.push_back(std::move(pair));
            }
        }
    }
    return report;
}

} // namespace qplane
