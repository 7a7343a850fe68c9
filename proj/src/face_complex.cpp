#include "ainfty/face_complex.hpp"

#include "ainfty/parallel.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace ainfty {

std::vector<long long> FaceComplex::f_vector() const {
    std::vector<long long> f(static_cast<std::size_t>(k + l + 1), 0);
    for (int d : degrees) f.at(static_cast<std::size_t>(d)) += 1;
    return f;
}

long long FaceComplex::euler() const {
    long long e = 0;
    for (int d : degrees) e += (d % 2 == 0) ? 1 : -1;
    return e;
}

std::size_t FaceComplex::top_cell() const {
    return index.at(Diagram::bare(k, l).serial());
}

FaceComplex enumerate_faces(int k, int l, int bound) {
    if (k + l > bound)
        throw std::invalid_argument("shape exceeds the configured enumeration bound");
    FaceComplex fc;
    fc.k = k;
    fc.l = l;

    std::map<std::string, Diagram> seen;
    std::deque<Diagram> queue;
    Diagram start = Diagram::bare(k, l);
    seen.emplace(start.serial(), start);
    queue.push_back(start);
    while (!queue.empty()) {
        Diagram d = queue.front();
        queue.pop_front();
        for (const Diagram& face : differential(d)) {
            if (seen.emplace(face.serial(), face).second) queue.push_back(face);
        }
    }

    fc.cells.reserve(seen.size());
    for (auto& [key, d] : seen) fc.cells.push_back(d);
    std::sort(fc.cells.begin(), fc.cells.end(), [](const Diagram& a, const Diagram& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.serial() < b.serial();
    });
    for (std::size_t i = 0; i < fc.cells.size(); ++i) {
        fc.index.emplace(fc.cells[i].serial(), i);
        fc.degrees.push_back(fc.cells[i].degree());
    }
    fc.faces.resize(fc.cells.size());
    for (std::size_t i = 0; i < fc.cells.size(); ++i) {
        for (const Diagram& face : differential(fc.cells[i]))
            fc.faces[i].push_back(fc.index.at(face.serial()));
        std::sort(fc.faces[i].begin(), fc.faces[i].end());
    }
    return fc;
}

DSquaredReport check_d_squared(const FaceComplex& fc) {
    DSquaredReport report;
    report.cells = fc.cells.size();

    struct CellStats {
        std::size_t paths = 0, nested = 0, plain = 0;
        std::vector<std::string> failures;
    };
    std::function<CellStats(std::size_t, std::size_t)> work = [&](std::size_t b, std::size_t e) {
        CellStats st;
        for (std::size_t ci = b; ci < e; ++ci) {
            // nested-count and total-count per resulting diagram
            std::map<std::string, std::pair<std::size_t, std::size_t>> reached;
            for (const Insertion& first : differential_insertions(fc.cells[ci])) {
                for (const Insertion& second : differential_insertions(first.result)) {
                    auto& entry = reached[second.result.serial()];
                    ++entry.first;
                    if (insertion_nested(second, first.created)) ++entry.second;
                    ++st.paths;
                }
            }
            for (const auto& [key, counts] : reached) {
                const auto [total, nested] = counts;
                const std::size_t plain = total - nested;
                if (nested % 2 != 0 || plain % 2 != 0) {
                    st.failures.push_back("cell " + fc.cells[ci].display() + " reaches " + key +
                                          " " + std::to_string(total) + " times (" +
                                          std::to_string(nested) + " composed)");
                    continue;
                }
                st.nested += nested / 2;
                st.plain += plain / 2;
            }
        }
        return st;
    };
    for (auto& st : parallel_chunks<CellStats>(fc.cells.size(), 8, work)) {
        report.pre_cancellation_terms += st.paths;
        report.composed_pairs += st.nested;
        report.independent_pairs += st.plain;
        for (auto& f : st.failures) {
            report.ok = false;
            if (report.failures.size() < 8) report.failures.push_back(std::move(f));
        }
    }
    return report;
}

AbstractComplex to_abstract(const FaceComplex& fc) {
    AbstractComplex a;
    for (const Diagram& d : fc.cells) a.ids.push_back(d.serial());
    a.degrees = fc.degrees;
    a.faces = fc.faces;
    return a;
}

/* ------------------------------------------------------------------ */
/* associahedron oracle: bracketings as planar trees                    */
/* ------------------------------------------------------------------ */

namespace {

std::vector<Tree> tree_insertions(const Tree& t) {
    std::vector<Tree> out;
    std::function<void(const Tree&, std::vector<int>&)> walk = [&](const Tree& node,
                                                                   std::vector<int>& path) {
        if (node.is_leaf()) return;
        const int p = static_cast<int>(node.children.size());
        for (int len = 2; len <= p - 1; ++len)
            for (int start = 0; start + len <= p; ++start) {
                std::function<Tree(const Tree&, std::size_t)> rebuild =
                    [&](const Tree& cur, std::size_t depth) -> Tree {
                    Tree copy = cur;
                    if (depth == path.size()) {
                        Tree grouped;
                        grouped.children.assign(cur.children.begin() + start,
                                                cur.children.begin() + start + len);
                        copy.children.erase(copy.children.begin() + start,
                                            copy.children.begin() + start + len);
                        copy.children.insert(copy.children.begin() + start, std::move(grouped));
                        return copy;
                    }
                    copy.children[path[depth]] = rebuild(cur.children[path[depth]], depth + 1);
                    return copy;
                };
                out.push_back(rebuild(t, 0));
            }
        for (int i = 0; i < p; ++i) {
            path.push_back(i);
            walk(node.children[i], path);
            path.pop_back();
        }
    };
    std::vector<int> path;
    walk(t, path);
    return out;
}

}  // namespace

AbstractComplex associahedron_oracle(int n) {
    if (n < 1) throw std::invalid_argument("associahedron oracle needs n >= 1");
    std::map<std::string, Tree> seen;
    std::deque<Tree> queue;
    Tree corolla = Tree::corolla(n + 2);
    seen.emplace(corolla.serial(), corolla);
    queue.push_back(corolla);
    while (!queue.empty()) {
        Tree t = queue.front();
        queue.pop_front();
        for (const Tree& next : tree_insertions(t))
            if (seen.emplace(next.serial(), next).second) queue.push_back(next);
    }
    std::vector<Tree> cells;
    for (auto& [key, t] : seen) cells.push_back(t);
    std::sort(cells.begin(), cells.end(), [](const Tree& a, const Tree& b) {
        if (a.arity_excess() != b.arity_excess()) return a.arity_excess() < b.arity_excess();
        return a.serial() < b.serial();
    });
    AbstractComplex out;
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        out.ids.push_back(cells[i].serial());
        out.degrees.push_back(cells[i].arity_excess());
        index.emplace(cells[i].serial(), i);
    }
    out.faces.resize(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        std::set<std::string> support;  // mod-2 support, matching the diagram side
        for (const Tree& f : tree_insertions(cells[i])) {
            auto [it, fresh] = support.insert(f.serial());
            if (!fresh) support.erase(it);
        }
        for (const std::string& s : support) out.faces[i].push_back(index.at(s));
        std::sort(out.faces[i].begin(), out.faces[i].end());
    }
    return out;
}

/* ------------------------------------------------------------------ */
/* graded poset isomorphism by refinement + backtracking               */
/* ------------------------------------------------------------------ */

namespace {

std::vector<std::vector<std::size_t>> cofaces_of(const AbstractComplex& a) {
    std::vector<std::vector<std::size_t>> up(a.ids.size());
    for (std::size_t i = 0; i < a.faces.size(); ++i)
        for (std::size_t f : a.faces[i]) up[f].push_back(i);
    return up;
}

/* Joint color refinement: one palette covers both complexes, so equal
 * structural roles receive equal color ids on either side. */
std::pair<std::vector<long long>, std::vector<long long>> refine_colors(
    const AbstractComplex& a, const std::vector<std::vector<std::size_t>>& up_a,
    const AbstractComplex& b, const std::vector<std::vector<std::size_t>>& up_b) {
    using Key = std::tuple<long long, std::vector<long long>, std::vector<long long>>;
    std::vector<long long> ca(a.ids.size()), cb(b.ids.size());
    for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = a.degrees[i];
    for (std::size_t i = 0; i < cb.size(); ++i) cb[i] = b.degrees[i];
    auto key_of = [](const AbstractComplex& c, const std::vector<std::vector<std::size_t>>& up,
                     const std::vector<long long>& color, std::size_t i) {
        std::vector<long long> down, upc;
        for (std::size_t f : c.faces[i]) down.push_back(color[f]);
        for (std::size_t f : up[i]) upc.push_back(color[f]);
        std::sort(down.begin(), down.end());
        std::sort(upc.begin(), upc.end());
        return Key{color[i], std::move(down), std::move(upc)};
    };
    for (std::size_t round = 0; round < ca.size() + cb.size(); ++round) {
        std::map<Key, long long> palette;
        std::vector<Key> ka(ca.size()), kb(cb.size());
        for (std::size_t i = 0; i < ca.size(); ++i) {
            ka[i] = key_of(a, up_a, ca, i);
            palette.emplace(ka[i], 0);
        }
        for (std::size_t i = 0; i < cb.size(); ++i) {
            kb[i] = key_of(b, up_b, cb, i);
            palette.emplace(kb[i], 0);
        }
        long long id = 0;
        for (auto& [k, v] : palette) v = id++;  // ids follow the sorted key order
        std::vector<long long> na(ca.size()), nb(cb.size());
        for (std::size_t i = 0; i < ca.size(); ++i) na[i] = palette.at(ka[i]);
        for (std::size_t i = 0; i < cb.size(); ++i) nb[i] = palette.at(kb[i]);
        if (na == ca && nb == cb) break;
        ca = std::move(na);
        cb = std::move(nb);
    }
    return {std::move(ca), std::move(cb)};
}

}  // namespace

PosetIso poset_isomorphic(const AbstractComplex& a, const AbstractComplex& b) {
    PosetIso result;
    if (a.ids.size() != b.ids.size()) return result;
    const std::size_t n = a.ids.size();
    auto up_a = cofaces_of(a), up_b = cofaces_of(b);
    auto [col_a, col_b] = refine_colors(a, up_a, b, up_b);

    std::map<long long, std::size_t> hist_a, hist_b;
    for (long long c : col_a) ++hist_a[c];
    for (long long c : col_b) ++hist_b[c];
    if (hist_a != hist_b) return result;

    // Backtracking from the top degree downward: by the time a cell is
    // placed, all of its cofaces are placed, so the candidates are cut down
    // to the common faces of the mapped cofaces.  On face lattices this
    // leaves at most a handful of choices per cell.
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        if (a.degrees[x] != a.degrees[y]) return a.degrees[x] > a.degrees[y];
        if (hist_a[col_a[x]] != hist_a[col_a[y]]) return hist_a[col_a[x]] < hist_a[col_a[y]];
        return x < y;
    });

    std::vector<std::size_t> image(n, SIZE_MAX), preimage(n, SIZE_MAX);
    std::vector<std::set<std::size_t>> face_sets_b(n);
    for (std::size_t i = 0; i < n; ++i)
        face_sets_b[i] = std::set<std::size_t>(b.faces[i].begin(), b.faces[i].end());

    std::function<bool(std::size_t)> extend = [&](std::size_t step) -> bool {
        if (step == n) return true;
        std::size_t x = order[step];
        std::vector<std::size_t> candidates;
        if (up_a[x].empty()) {
            for (std::size_t y = 0; y < n; ++y)
                if (col_b[y] == col_a[x]) candidates.push_back(y);
        } else {
            // every coface of x is already placed; intersect their face lists
            std::size_t g0 = up_a[x][0];
            for (std::size_t y : b.faces[image[g0]])
                if (col_b[y] == col_a[x]) candidates.push_back(y);
            for (std::size_t gi = 1; gi < up_a[x].size(); ++gi) {
                const auto& fs = face_sets_b[image[up_a[x][gi]]];
                std::erase_if(candidates, [&](std::size_t y) { return fs.count(y) == 0; });
            }
        }
        for (std::size_t y : candidates) {
            if (preimage[y] != SIZE_MAX) continue;
            if (b.faces[y].size() != a.faces[x].size() || up_b[y].size() != up_a[x].size())
                continue;
            bool consistent = true;
            for (std::size_t g : up_b[y]) {
                if (preimage[g] == SIZE_MAX) {
                    consistent = false;  // y has an unplaced coface; x cannot match
                    break;
                }
            }
            if (!consistent) continue;
            image[x] = y;
            preimage[y] = x;
            if (extend(step + 1)) return true;
            image[x] = SIZE_MAX;
            preimage[y] = SIZE_MAX;
        }
        return false;
    };
    if (!extend(0)) return result;

    // Final verification of the witness before reporting success.
    for (std::size_t i = 0; i < n; ++i) {
        std::set<std::size_t> mapped;
        for (std::size_t f : a.faces[i]) mapped.insert(image[f]);
        if (mapped != face_sets_b[image[i]]) return result;
        if (a.degrees[i] != b.degrees[image[i]]) return result;
    }
    result.isomorphic = true;
    for (std::size_t i = 0; i < n; ++i) result.witness.emplace_back(a.ids[i], b.ids[image[i]]);
    return result;
}

/* ------------------------------------------------------------------ */
/* exports                                                             */
/* ------------------------------------------------------------------ */

std::string export_face_complex(const FaceComplex& fc, const std::string& format) {
    if (format == "dot") {
        std::ostringstream os;
        os << "digraph faces {\n";
        os << "  rankdir=TB;\n";
        for (std::size_t i = 0; i < fc.cells.size(); ++i)
            os << "  c" << i << " [label=\"" << fc.cells[i].display() << "\\ndeg "
               << fc.degrees[i] << "\"];\n";
        for (std::size_t i = 0; i < fc.cells.size(); ++i)
            for (std::size_t f : fc.faces[i]) os << "  c" << i << " -> c" << f << ";\n";
        os << "}\n";
        return os.str();
    }
    if (format == "json") {
        std::ostringstream os;
        os << "{\n  \"schema\": 1,\n  \"shape\": {\"k\": " << fc.k << ", \"l\": " << fc.l
           << "},\n  \"cells\": [\n";
        for (std::size_t i = 0; i < fc.cells.size(); ++i) {
            os << "    {\"id\": \"" << fc.cells[i].serial() << "\", \"degree\": " << fc.degrees[i]
               << ", \"display\": \"" << fc.cells[i].display() << "\"}"
               << (i + 1 < fc.cells.size() ? ",\n" : "\n");
        }
        os << "  ],\n  \"incidence\": {\n";
        for (std::size_t i = 0; i < fc.cells.size(); ++i) {
            os << "    \"" << fc.cells[i].serial() << "\": [";
            for (std::size_t j = 0; j < fc.faces[i].size(); ++j)
                os << (j ? ", " : "") << "\"" << fc.cells[fc.faces[i][j]].serial() << "\"";
            os << "]" << (i + 1 < fc.cells.size() ? ",\n" : "\n");
        }
        os << "  }\n}\n";
        return os.str();
    }
    throw std::invalid_argument("unknown export format: " + format);
}

NaturalityReport naturality_check(const FaceComplex& fc, const AInfinityAlgebra& alg,
                                  const InfinityInnerProduct& ip) {
    if (alg.field != Field::ModTwo)
        throw std::invalid_argument("naturality check runs over the two-element field");
    if (!is_valid(ip))
        throw std::invalid_argument("naturality check needs a valid inner product");
    NaturalityReport report;
    report.cells = fc.cells.size();
    const MultiMap* m1 = nullptr;
    if (auto it = alg.ops.find(1); it != alg.ops.end()) m1 = &it->second;

    const int N = fc.k + fc.l + 2;
    std::vector<std::vector<std::string>> tuples;
    {
        std::vector<std::string> cur(N);
        std::function<void(int)> walk = [&](int i) {
            if (i == N) {
                tuples.push_back(cur);
                return;
            }
            for (const auto& e : alg.basis->elements()) {
                cur[i] = e.label;
                walk(i + 1);
            }
        };
        walk(0);
    }

    for (const Diagram& cell : fc.cells) {
        auto faces = differential(cell);
        for (const auto& tuple : tuples) {
            ++report.tuples;
            Scalar lhs = Scalar::zero(alg.field);
            if (m1) {
                for (int pos = 0; pos < N; ++pos) {
                    SparseVec out = m1->apply({tuple[pos]});
                    for (const auto& [e, c] : out.terms()) {
                        std::vector<std::string> t = tuple;
                        t[pos] = e;
                        lhs += evaluate_diagram(cell, alg, ip, t) * c;
                    }
                }
            }
            Scalar rhs = Scalar::zero(alg.field);
            for (const Diagram& face : faces) rhs += evaluate_diagram(face, alg, ip, tuple);
            if (!(lhs == rhs)) {
                report.ok = false;
                if (report.failures.size() < 8)
                    report.failures.push_back("cell " + cell.display() + " at inputs (" +
                                              [&] {
                                                  std::string s;
                                                  for (std::size_t i = 0; i < tuple.size(); ++i)
                                                      s += (i ? "," : "") + tuple[i];
                                                  return s;
                                              }() +
                                              "): lhs " + lhs.str() + " != rhs " + rhs.str());
            }
        }
    }
    return report;
}

}  // namespace ainfty
