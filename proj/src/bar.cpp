#include "ainfty/bar.hpp"

#include <sstream>

namespace ainfty {

namespace {

Word slice_plain(const Word& w, std::size_t begin, std::size_t end) {
    std::vector<std::string> labels(w.labels().begin() + begin, w.labels().begin() + end);
    return Word::plain(w.main_basis(), std::move(labels));
}

Word slice_marked(const Word& w, std::size_t begin, std::size_t end) {
    std::vector<std::string> labels(w.labels().begin() + begin, w.labels().begin() + end);
    return Word::with_mark(w.main_basis(), w.marked_basis(), std::move(labels), w.mark() - begin);
}

/* Replaces word[start, start+width) by each term of `out`, with the Koszul
 * sign of moving a map of the given degree past the prefix. */
void add_insertion(FormalSum& acc, const Word& word, std::size_t start, std::size_t width,
                   const SparseVec& out, bool out_is_marked, int map_degree) {
    if (out.is_zero()) return;
    Scalar sign = sign_pow(acc.field(), static_cast<long long>(map_degree) *
                                            word.degree_prefix(start));
    std::vector<std::string> labels;
    labels.reserve(word.size() - width + 1);
    labels.insert(labels.end(), word.labels().begin(), word.labels().begin() + start);
    std::size_t slot = labels.size();
    labels.push_back("");
    labels.insert(labels.end(), word.labels().begin() + start + width, word.labels().end());

    std::optional<std::size_t> mark;
    BasisPtr marked_basis;
    if (out_is_marked) {
        mark = slot;
        marked_basis = out.basis();
        if (word.marked() && (word.mark() < start || word.mark() >= start + width))
            throw std::invalid_argument("insertion would leave two marked entries");
    } else if (word.marked()) {
        marked_basis = word.marked_basis();
        if (word.mark() < start) mark = word.mark();
        else if (word.mark() >= start + width) mark = word.mark() - width + 1;
        else throw std::invalid_argument("plain insertion cannot swallow the mark");
    }

    for (const auto& [label, c] : out.terms()) {
        labels[slot] = label;
        Word nw = mark ? Word::with_mark(word.main_basis(), marked_basis, labels, *mark)
                       : Word::plain(word.main_basis(), labels);
        acc.add(nw, sign * c);
    }
}

void require_plain_word(const Word& w, const char* who) {
    if (w.marked()) throw std::invalid_argument(std::string(who) + ": word must be unmarked");
}

void require_marked_word(const Word& w, const char* who) {
    if (!w.marked()) throw std::invalid_argument(std::string(who) + ": word must be marked");
}

}  // namespace

PairSum comultiply(const Word& word, Field field) {
    require_plain_word(word, "comultiply");
    PairSum out(field);
    for (std::size_t i = 0; i <= word.size(); ++i)
        out.add({slice_plain(word, 0, i), slice_plain(word, i, word.size())}, Scalar::one(field));
    return out;
}

PairSum comultiply_marked(const Word& word, Field field) {
    require_marked_word(word, "comultiply_marked");
    PairSum out(field);
    const std::size_t mk = word.mark(), n = word.size();
    // Cuts before the mark: plain prefix (x) marked rest.
    for (std::size_t c = 0; c <= mk; ++c)
        out.add({slice_plain(word, 0, c), slice_marked(word, c, n)}, Scalar::one(field));
    // Cuts after the mark: marked front (x) plain suffix.
    for (std::size_t c = mk + 1; c <= n; ++c)
        out.add({slice_marked(word, 0, c), slice_plain(word, c, n)}, Scalar::one(field));
    return out;
}

FormalSum lift_coderivation(const MultiMap& component, const Word& word) {
    require_plain_word(word, "lift_coderivation");
    if (!component.is_plain()) throw std::invalid_argument("component must be a plain map");
    FormalSum acc(component.field());
    const std::size_t n = static_cast<std::size_t>(component.arity());
    if (word.size() < n) return acc;
    for (std::size_t start = 0; start + n <= word.size(); ++start) {
        std::vector<std::string> tuple(word.labels().begin() + start,
                                       word.labels().begin() + start + n);
        bool marked_out = !same_basis(component.out_basis(), word.main_basis());
        add_insertion(acc, word, start, n, component.apply(tuple), marked_out,
                      component.degree());
    }
    return acc;
}

FormalSum lift_marked_coderivation(const MultiMap& component, const Word& word) {
    require_plain_word(word, "lift_marked_coderivation");
    if (!component.is_plain()) throw std::invalid_argument("component must be a plain map");
    FormalSum acc(component.field());
    const std::size_t n = static_cast<std::size_t>(component.arity());
    if (word.size() < n) return acc;
    for (std::size_t start = 0; start + n <= word.size(); ++start) {
        std::vector<std::string> tuple(word.labels().begin() + start,
                                       word.labels().begin() + start + n);
        add_insertion(acc, word, start, n, component.apply(tuple), /*marked*/ true,
                      component.degree());
    }
    return acc;
}

FormalSum lift_module_differential(const PlainFamily& psi, const MarkedFamily& rho,
                                   const Word& word) {
    require_marked_word(word, "lift_module_differential");
    Field field = Field::Rational;
    if (!psi.empty()) field = psi.begin()->second.field();
    else if (!rho.empty()) field = rho.begin()->second.field();
    FormalSum acc(field);
    const std::size_t mk = word.mark(), n = word.size();
    const std::size_t left = mk, right = n - 1 - mk;

    for (const auto& [i, comp] : psi) {
        const std::size_t w = static_cast<std::size_t>(i);
        // strictly left of the mark
        for (std::size_t start = 0; start + w <= left; ++start) {
            std::vector<std::string> tuple(word.labels().begin() + start,
                                           word.labels().begin() + start + w);
            add_insertion(acc, word, start, w, comp.apply(tuple), false, comp.degree());
        }
        // strictly right of the mark
        for (std::size_t start = mk + 1; start + w <= n; ++start) {
            std::vector<std::string> tuple(word.labels().begin() + start,
                                           word.labels().begin() + start + w);
            add_insertion(acc, word, start, w, comp.apply(tuple), false, comp.degree());
        }
    }
    for (const auto& [kl, comp] : rho) {
        const std::size_t p = static_cast<std::size_t>(kl.first);
        const std::size_t q = static_cast<std::size_t>(kl.second);
        if (p > left || q > right) continue;
        const std::size_t start = mk - p, w = p + q + 1;
        std::vector<std::string> tuple(word.labels().begin() + start,
                                       word.labels().begin() + start + w);
        add_insertion(acc, word, start, w, comp.apply(tuple), true, comp.degree());
    }
    return acc;
}

FormalSum lift_comodule_morphism(const MarkedFamily& components, const Word& word) {
    require_marked_word(word, "lift_comodule_morphism");
    Field field = components.empty() ? Field::Rational : components.begin()->second.field();
    FormalSum acc(field);
    const std::size_t mk = word.mark(), n = word.size();
    const std::size_t left = mk, right = n - 1 - mk;
    for (const auto& [kl, comp] : components) {
        const std::size_t p = static_cast<std::size_t>(kl.first);
        const std::size_t q = static_cast<std::size_t>(kl.second);
        if (p > left || q > right) continue;
        const std::size_t start = mk - p, w = p + q + 1;
        std::vector<std::string> tuple(word.labels().begin() + start,
                                       word.labels().begin() + start + w);
        add_insertion(acc, word, start, w, comp.apply(tuple), true, comp.degree());
    }
    return acc;
}

FormalSum CoderivationView::apply(const Word& word) const {
    FormalSum acc(field);
    switch (kind) {
        case ViewKind::Coderivation:
            for (const auto& [n, c] : plain) acc += lift_coderivation(c, word);
            return acc;
        case ViewKind::MarkedCoderivation:
            for (const auto& [n, c] : plain) acc += lift_marked_coderivation(c, word);
            return acc;
        case ViewKind::ModuleDifferential:
            if (plain.empty() && marked.empty()) return acc;
            return lift_module_differential(plain, marked, word);
        case ViewKind::ComoduleMorphism:
            return lift_comodule_morphism(marked, word);
    }
    return acc;
}

bool CoderivationView::is_zero() const {
    for (const auto& [n, c] : plain)
        if (!c.is_zero()) return false;
    for (const auto& [kl, c] : marked)
        if (!c.is_zero()) return false;
    return true;
}

std::string CoderivationView::content_key() const {
    std::ostringstream os;
    os << "view:" << static_cast<int>(kind) << ":deg=" << degree << "{";
    for (const auto& [n, c] : plain) os << n << "=>" << c.content_key() << ";";
    for (const auto& [kl, c] : marked)
        os << kl.first << "," << kl.second << "=>" << c.content_key() << ";";
    os << "}";
    return os.str();
}

namespace {

void common_degree_and_field(const PlainFamily& plain, const MarkedFamily& marked,
                             CoderivationView& v) {
    bool seen = false;
    auto absorb = [&](int deg, Field f) {
        if (!seen) {
            v.degree = deg;
            v.field = f;
            seen = true;
            return;
        }
        if (v.degree != deg)
            throw std::invalid_argument("view components must share one degree");
        if (v.field != f) throw std::invalid_argument("view components must share one field");
    };
    for (const auto& [n, c] : plain) absorb(c.degree(), c.field());
    for (const auto& [kl, c] : marked) absorb(c.degree(), c.field());
}

}  // namespace

CoderivationView make_coderivation_view(PlainFamily components) {
    CoderivationView v;
    v.kind = ViewKind::Coderivation;
    for (const auto& [n, c] : components) {
        if (!c.is_plain() || n != c.arity())
            throw std::invalid_argument("coderivation components must be plain, keyed by arity");
        if (!same_basis(c.plain_sig().in, c.plain_sig().out))
            throw std::invalid_argument("coderivation components must map V^n -> V");
    }
    v.plain = std::move(components);
    common_degree_and_field(v.plain, v.marked, v);
    return v;
}

CoderivationView make_marked_coderivation_view(PlainFamily components) {
    CoderivationView v;
    v.kind = ViewKind::MarkedCoderivation;
    for (const auto& [n, c] : components)
        if (!c.is_plain() || n != c.arity())
            throw std::invalid_argument("components must be plain maps keyed by arity");
    v.plain = std::move(components);
    common_degree_and_field(v.plain, v.marked, v);
    return v;
}

CoderivationView make_module_differential_view(PlainFamily psi, MarkedFamily rho) {
    CoderivationView v;
    v.kind = ViewKind::ModuleDifferential;
    for (const auto& [n, c] : psi)
        if (!c.is_plain() || n != c.arity())
            throw std::invalid_argument("psi components must be plain maps keyed by arity");
    for (const auto& [kl, c] : rho) {
        if (c.is_plain() || kl.first != c.marked_sig().left || kl.second != c.marked_sig().right)
            throw std::invalid_argument("rho components must be marked maps keyed by (k,l)");
        if (!same_basis(c.marked_sig().marked_in, c.marked_sig().out))
            throw std::invalid_argument("rho components must land back in the marked module");
    }
    v.plain = std::move(psi);
    v.marked = std::move(rho);
    common_degree_and_field(v.plain, v.marked, v);
    return v;
}

CoderivationView make_comodule_morphism_view(MarkedFamily components) {
    CoderivationView v;
    v.kind = ViewKind::ComoduleMorphism;
    for (const auto& [kl, c] : components)
        if (c.is_plain() || kl.first != c.marked_sig().left || kl.second != c.marked_sig().right)
            throw std::invalid_argument("morphism components must be marked maps keyed by (k,l)");
    v.marked = std::move(components);
    common_degree_and_field(v.plain, v.marked, v);
    return v;
}

std::vector<Word> enumerate_plain_words(const BasisPtr& basis, std::size_t max_len,
                                        bool include_unit) {
    std::vector<Word> out;
    if (include_unit) out.push_back(Word::unit(basis));
    std::vector<std::string> labels;
    std::function<void(std::size_t)> walk = [&](std::size_t remaining) {
        if (!labels.empty()) out.push_back(Word::plain(basis, labels));
        if (remaining == 0) return;
        for (const auto& e : basis->elements()) {
            labels.push_back(e.label);
            walk(remaining - 1);
            labels.pop_back();
        }
    };
    walk(max_len);
    return out;
}

std::vector<Word> enumerate_marked_words(const BasisPtr& v, const BasisPtr& w,
                                         std::size_t max_len) {
    std::vector<Word> out;
    for (std::size_t n = 1; n <= max_len; ++n) {
        std::vector<std::string> labels(n);
        for (std::size_t mk = 0; mk < n; ++mk) {
            std::function<void(std::size_t)> walk = [&](std::size_t i) {
                if (i == n) {
                    out.push_back(Word::with_mark(v, w, labels, mk));
                    return;
                }
                const BasisPtr& b = (i == mk) ? w : v;
                for (const auto& e : b->elements()) {
                    labels[i] = e.label;
                    walk(i + 1);
                }
            };
            walk(0);
        }
    }
    return out;
}

PlainFamily project_plain_evaluator(const std::function<FormalSum(const Word&)>& fn, int degree,
                                    Field field, const BasisPtr& domain_main,
                                    const BasisPtr& out_basis, bool into_marked, std::size_t L) {
    PlainFamily family;
    for (std::size_t n = 1; n <= L; ++n) {
        MultiMap comp =
            MultiMap::plain_map(domain_main, out_basis, static_cast<int>(n), degree, field, true);
        for (const Word& word : enumerate_plain_words(domain_main, n, false)) {
            if (word.size() != n) continue;
            SparseVec img(out_basis, field);
            for (const auto& [u, c] : fn(word).terms())
                if (u.size() == 1 && u.marked() == into_marked) img.add(u.label(0), c);
            if (!img.is_zero()) comp.set(word.labels(), img);
        }
        if (!comp.is_zero()) family.emplace(static_cast<int>(n), std::move(comp));
    }
    return family;
}

MarkedFamily project_marked_evaluator(const std::function<FormalSum(const Word&)>& fn, int degree,
                                      Field field, const BasisPtr& domain_main,
                                      const BasisPtr& domain_marked, const BasisPtr& target_marked,
                                      std::size_t L) {
    MarkedFamily family;
    for (std::size_t n = 1; n <= L; ++n) {
        for (std::size_t p = 0; p < n; ++p) {
            const std::size_t q = n - 1 - p;
            MultiMap comp = MultiMap::marked_map(domain_main, domain_marked, target_marked,
                                                 static_cast<int>(p), static_cast<int>(q), degree,
                                                 field, true);
            std::vector<std::string> labels(n);
            std::function<void(std::size_t)> walk = [&](std::size_t i) {
                if (i == n) {
                    Word word = Word::with_mark(domain_main, domain_marked, labels, p);
                    SparseVec img(target_marked, field);
                    for (const auto& [u, c] : fn(word).terms())
                        if (u.size() == 1 && u.marked()) img.add(u.label(0), c);
                    if (!img.is_zero()) comp.set(labels, img);
                    return;
                }
                const BasisPtr& b = (i == p) ? domain_marked : domain_main;
                for (const auto& e : b->elements()) {
                    labels[i] = e.label;
                    walk(i + 1);
                }
            };
            walk(0);
            if (!comp.is_zero())
                family.emplace(std::make_pair(static_cast<int>(p), static_cast<int>(q)),
                               std::move(comp));
        }
    }
    return family;
}

ProjectedComponents project_components(const CoderivationView& view, const TruncationPolicy& trunc,
                                       const BasisPtr& domain_main, const BasisPtr& domain_marked,
                                       const BasisPtr& target_main, const BasisPtr& target_marked) {
    ProjectedComponents out;
    auto fn = [&view](const Word& w) { return view.apply(w); };
    if (view.kind == ViewKind::Coderivation || view.kind == ViewKind::MarkedCoderivation) {
        const bool into_marked = view.kind == ViewKind::MarkedCoderivation;
        out.plain = project_plain_evaluator(fn, view.degree, view.field, domain_main,
                                            into_marked ? target_marked : target_main, into_marked,
                                            trunc.max_word_length);
    } else {
        out.marked = project_marked_evaluator(fn, view.degree, view.field, domain_main,
                                              domain_marked, target_marked,
                                              trunc.max_word_length);
    }
    return out;
}

namespace {

PairSum comultiply_any(const Word& w, Field f) {
    return w.marked() ? comultiply_marked(w, f) : comultiply(w, f);
}

std::string pair_sum_str(const PairSum& s) {
    if (s.is_zero()) return "0";
    std::string out;
    for (const auto& [key, c] : s.terms()) {
        if (!out.empty()) out += " + ";
        if (!c.is_one()) out += c.str() + "*";
        out += key.first.str() + "(x)" + key.second.str();
    }
    return out;
}

}  // namespace

IdentityCheckResult check_coderivation_identity(
    const CoderivationView& view, const std::vector<Word>& words,
    const std::function<FormalSum(const Word&)>& override_sigma) {
    IdentityCheckResult result;
    const Field f = view.field;
    auto sigma = [&](const Word& w) {
        return override_sigma ? override_sigma(w) : view.apply(w);
    };
    auto psi_coder = [&](const Word& w) {
        FormalSum acc(f);
        for (const auto& [n, c] : view.plain) acc += lift_coderivation(c, w);
        return acc;
    };

    for (const Word& word : words) {
        ++result.words_checked;

        PairSum lhs(f);
        for (const auto& [u, c] : sigma(word).terms()) lhs += comultiply_any(u, f).scaled(c);

        PairSum rhs(f);
        for (const auto& [split, c] : comultiply_any(word, f).terms()) {
            const Word& w1 = split.first;
            const Word& w2 = split.second;
            switch (view.kind) {
                case ViewKind::Coderivation:
                case ViewKind::MarkedCoderivation: {
                    for (const auto& [u, c2] : sigma(w1).terms()) rhs.add({u, w2}, c * c2);
                    Scalar s = sign_pow(f, static_cast<long long>(view.degree) * w1.degree());
                    for (const auto& [u, c2] : sigma(w2).terms()) rhs.add({w1, u}, c * c2 * s);
                    break;
                }
                case ViewKind::ModuleDifferential: {
                    Scalar s = sign_pow(f, static_cast<long long>(view.degree) * w1.degree());
                    if (w2.marked()) {  // TV (x) T^W V sector
                        for (const auto& [u, c2] : psi_coder(w1).terms()) rhs.add({u, w2}, c * c2);
                        for (const auto& [u, c2] : sigma(w2).terms()) rhs.add({w1, u}, c * c2 * s);
                    } else {  // T^W V (x) TV sector
                        for (const auto& [u, c2] : sigma(w1).terms()) rhs.add({u, w2}, c * c2);
                        for (const auto& [u, c2] : psi_coder(w2).terms())
                            rhs.add({w1, u}, c * c2 * s);
                    }
                    break;
                }
                case ViewKind::ComoduleMorphism: {
                    if (w2.marked()) {
                        Scalar s = sign_pow(f, static_cast<long long>(view.degree) * w1.degree());
                        for (const auto& [u, c2] : sigma(w2).terms()) rhs.add({w1, u}, c * c2 * s);
                    } else {
                        for (const auto& [u, c2] : sigma(w1).terms()) rhs.add({u, w2}, c * c2);
                    }
                    break;
                }
            }
        }

        lhs -= rhs;
        if (!lhs.is_zero()) {
            result.ok = false;
            if (result.failures.size() < 8)
                result.failures.push_back({word, "difference = " + pair_sum_str(lhs)});
        }
    }
    return result;
}

}  // namespace ainfty
