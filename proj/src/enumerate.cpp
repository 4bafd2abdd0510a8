#include "tilt/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <sstream>

namespace tilt {

std::uint64_t default_budget() {
    if (const char* env = std::getenv("TILT_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("TILT_BUDGET is not a number: ") + env);
        }
    }
    return 10'000'000;
}

std::vector<std::size_t> default_bound(const AlgPtr& a) { return regular_module(a).dim; }

std::vector<std::size_t> parse_bound(const std::string& text, int vertices) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(item, &used);
            if (used != item.size() || v < 0) throw std::invalid_argument("");
            out.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad bound entry '" + item + "'");
        }
    }
    if (out.size() != static_cast<std::size_t>(vertices))
        throw std::invalid_argument("bound has " + std::to_string(out.size()) + " entries, expected " +
                                    std::to_string(vertices));
    return out;
}

namespace {

std::string dim_text(const std::vector<std::size_t>& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

struct Layout {
    std::vector<std::size_t> offset;  // first entry of each arrow block
    std::size_t entries = 0;
};

// Residue matrices stored row-major in one flat tuple of digits.
class Sweep {
public:
    Sweep(const AlgPtr& a, const std::vector<std::size_t>& d) : a_(a), d_(d), p_(a->field().p) {
        for (const Arrow& ar : a->quiver().arrows) {
            lay_.offset.push_back(lay_.entries);
            lay_.entries += d[ar.tgt] * d[ar.src];
        }
        omega_ = 1;
        if (p_ > 2) {
            for (std::uint32_t g = 2; g < p_; ++g) {
                bool primitive = true;
                std::uint64_t x = 1;
                for (std::uint32_t k = 1; k < p_ - 1 && primitive; ++k) {
                    x = x * g % p_;
                    if (x == 1) primitive = false;
                }
                if (primitive) {
                    omega_ = g;
                    break;
                }
            }
            omega_inv_ = 1;
            for (std::uint32_t k = 0; k < p_ - 2; ++k) omega_inv_ = omega_inv_ * omega_ % p_;
        }
    }

    std::size_t entries() const { return lay_.entries; }

    void decode(std::uint64_t idx, std::vector<std::uint32_t>& t) const {
        t.resize(lay_.entries);
        for (auto& x : t) {
            x = static_cast<std::uint32_t>(idx % p_);
            idx /= p_;
        }
    }
    std::uint64_t encode(const std::vector<std::uint32_t>& t) const {
        std::uint64_t idx = 0;
        for (std::size_t k = t.size(); k-- > 0;) idx = idx * p_ + t[k];
        return idx;
    }

    bool satisfies_relations(const std::vector<std::uint32_t>& t) const {
        for (const Relation& r : a_->relations()) {
            const int s = r[0].path.src, g = r[0].path.tgt;
            std::vector<std::uint64_t> sum(d_[g] * d_[s], 0);
            for (const Term& term : r) {
                std::vector<std::uint64_t> cur = product(t, term.path);
                std::uint64_t c = term.coeff.residue();
                for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = (sum[i] + c * cur[i]) % p_;
            }
            for (auto x : sum)
                if (x) return false;
        }
        return true;
    }

    // Images of t under the generators of the base-change group.
    template <class F>
    void neighbours(const std::vector<std::uint32_t>& t, F&& visit) const {
        std::vector<std::uint32_t> u;
        const auto& arrows = a_->quiver().arrows;
        for (int v = 0; v < a_->vertices(); ++v) {
            const std::size_t m = d_[v];
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) {
                    if (i == j) continue;
                    u = t;
                    for (std::size_t k = 0; k < arrows.size(); ++k) {
                        const std::size_t rows = d_[arrows[k].tgt], cols = d_[arrows[k].src];
                        std::uint32_t* blk = u.data() + lay_.offset[k];
                        if (arrows[k].tgt == v)  // row i += row j
                            for (std::size_t c = 0; c < cols; ++c)
                                blk[i * cols + c] = static_cast<std::uint32_t>((blk[i * cols + c] + blk[j * cols + c]) % p_);
                        if (arrows[k].src == v)  // column j -= column i
                            for (std::size_t r = 0; r < rows; ++r)
                                blk[r * cols + j] =
                                    static_cast<std::uint32_t>((blk[r * cols + j] + p_ - blk[r * cols + i]) % p_);
                    }
                    visit(u);
                }
            if (p_ > 2)
                for (std::size_t i = 0; i < m; ++i) {
                    u = t;
                    for (std::size_t k = 0; k < arrows.size(); ++k) {
                        const std::size_t rows = d_[arrows[k].tgt], cols = d_[arrows[k].src];
                        std::uint32_t* blk = u.data() + lay_.offset[k];
                        if (arrows[k].tgt == v)
                            for (std::size_t c = 0; c < cols; ++c)
                                blk[i * cols + c] = static_cast<std::uint32_t>(std::uint64_t(blk[i * cols + c]) * omega_ % p_);
                        if (arrows[k].src == v)
                            for (std::size_t r = 0; r < rows; ++r)
                                blk[r * cols + i] =
                                    static_cast<std::uint32_t>(std::uint64_t(blk[r * cols + i]) * omega_inv_ % p_);
                    }
                    visit(u);
                }
        }
    }

    Rep to_rep(const std::vector<std::uint32_t>& t) const {
        Rep r;
        r.alg = a_;
        r.dim = d_;
        const Field f = a_->field();
        const auto& arrows = a_->quiver().arrows;
        for (std::size_t k = 0; k < arrows.size(); ++k) {
            const std::size_t rows = d_[arrows[k].tgt], cols = d_[arrows[k].src];
            Matrix m(f, rows, cols);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Scalar::from_int(f, t[lay_.offset[k] + i * cols + j]);
            r.maps.push_back(std::move(m));
        }
        return r;
    }

private:
    AlgPtr a_;
    std::vector<std::size_t> d_;
    std::uint32_t p_;
    Layout lay_;
    std::uint64_t omega_ = 1, omega_inv_ = 1;

    std::vector<std::uint64_t> product(const std::vector<std::uint32_t>& t, const Path& path) const {
        const auto& arrows = a_->quiver().arrows;
        std::size_t n = d_[path.src];
        std::vector<std::uint64_t> cur(n * n, 0);
        for (std::size_t i = 0; i < n; ++i) cur[i * n + i] = 1;
        std::size_t cols = n, rows = n;
        for (int a : path.arrows) {
            const std::size_t r2 = d_[arrows[a].tgt];
            const std::uint32_t* blk = t.data() + lay_.offset[a];
            std::vector<std::uint64_t> next(r2 * cols, 0);
            for (std::size_t i = 0; i < r2; ++i)
                for (std::size_t k = 0; k < rows; ++k) {
                    std::uint64_t x = blk[i * rows + k];
                    if (!x) continue;
                    for (std::size_t j = 0; j < cols; ++j) next[i * cols + j] = (next[i * cols + j] + x * cur[k * cols + j]) % p_;
                }
            cur = std::move(next);
            rows = r2;
        }
        return cur;
    }
};

}  // namespace

Inventory enumerate(const AlgPtr& a, const std::vector<std::size_t>& bound, std::uint64_t budget) {
    const Field f = a->field();
    if (!f.is_finite())
        throw std::invalid_argument("enumeration needs a finite field; over Q there are infinitely many modules");
    const int V = a->vertices();
    if (bound.size() != static_cast<std::size_t>(V)) throw std::invalid_argument("bound has the wrong length");

    std::vector<std::vector<std::size_t>> dims{{}};
    for (int v = 0; v < V; ++v) {
        std::vector<std::vector<std::size_t>> next;
        for (auto& d : dims)
            for (std::size_t k = 0; k <= bound[v]; ++k) {
                next.push_back(d);
                next.back().push_back(k);
            }
        dims = std::move(next);
    }
    std::stable_sort(dims.begin(), dims.end(), [](const auto& x, const auto& y) {
        std::size_t sx = 0, sy = 0;
        for (auto v : x) sx += v;
        for (auto v : y) sy += v;
        return sx < sy;
    });

    Inventory inv;
    inv.alg = a;
    inv.bound = bound;
    std::vector<std::uint64_t> counts;
    for (auto& d : dims) {
        Sweep s(a, d);
        std::uint64_t c = 1;
        for (std::size_t k = 0; k < s.entries(); ++k) {
            if (c > budget / f.p) throw BudgetExceeded("enumeration budget exceeded at dimension vector " + dim_text(d));
            c *= f.p;
        }
        inv.candidates += c;
        if (inv.candidates > budget)
            throw BudgetExceeded("enumeration budget exceeded at dimension vector " + dim_text(d));
        counts.push_back(c);
    }

    for (std::size_t di = 0; di < dims.size(); ++di) {
        Sweep s(a, dims[di]);
        const std::uint64_t n = counts[di];
        std::vector<bool> seen(n, false);
        std::vector<std::uint32_t> t;
        for (std::uint64_t idx = 0; idx < n; ++idx) {
            if (seen[idx]) continue;
            s.decode(idx, t);
            if (!s.satisfies_relations(t)) continue;
            Rep rep = s.to_rep(t);
            seen[idx] = true;
            std::deque<std::uint64_t> queue{idx};
            std::vector<std::uint32_t> cur;
            while (!queue.empty()) {
                s.decode(queue.front(), cur);
                queue.pop_front();
                s.neighbours(cur, [&](const std::vector<std::uint32_t>& u) {
                    std::uint64_t j = s.encode(u);
                    if (!seen[j]) {
                        seen[j] = true;
                        queue.push_back(j);
                    }
                });
            }
            if (is_nilpotent_rep(rep)) inv.reps.push_back(std::move(rep));
        }
    }
    return inv;
}

}  // namespace tilt
