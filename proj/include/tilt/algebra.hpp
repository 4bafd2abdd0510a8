#pragma once
// Path algebras of quivers modulo admissible relations.
// Composition is function-style: the written product b*a means "a, then b".
// Vertices are 0-based internally and 1-based in every text format.

#include "tilt/linalg.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace tilt {

struct Arrow {
    std::string name;
    int src = 0;
    int tgt = 0;
};

struct Quiver {
    int n = 0;
    std::vector<Arrow> arrows;
    int arrow_index(const std::string& name) const;  // -1 when absent
};

// A path: arrow indices in the order they are applied.  A lone vertex has no arrows.
struct Path {
    int src = 0;
    int tgt = 0;
    std::vector<int> arrows;

    std::size_t length() const { return arrows.size(); }
    bool operator==(const Path& o) const { return src == o.src && tgt == o.tgt && arrows == o.arrows; }
};
// Length-lexicographic order.
bool path_less(const Path& a, const Path& b);

struct Term {
    Scalar coeff;
    Path path;
};
using Relation = std::vector<Term>;

// Coordinates of an algebra element over the path basis.
using Elem = Vec;

class Algebra;
using AlgPtr = std::shared_ptr<const Algebra>;

struct BuildOptions {
    std::size_t max_length = 32;
};

AlgPtr build_algebra(const Quiver& q, const std::vector<Relation>& rels, Field f, BuildOptions opt = {});
AlgPtr opposite(const AlgPtr& a);
bool same_algebra(const AlgPtr& a, const AlgPtr& b);

class Algebra : public std::enable_shared_from_this<Algebra> {
public:
    Field field() const { return field_; }
    const Quiver& quiver() const { return quiver_; }
    int vertices() const { return quiver_.n; }
    const std::vector<Relation>& relations() const { return relations_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Path>& basis() const { return basis_; }
    const Path& basis_path(std::size_t b) const { return basis_[b]; }
    int src(std::size_t b) const { return basis_[b].src; }
    int tgt(std::size_t b) const { return basis_[b].tgt; }
    // Basis indices of e_to A e_from, i.e. paths from `from` to `to`.
    const std::vector<std::size_t>& between(int from, int to) const;
    std::size_t max_length() const { return bound_; }
    bool is_opposite_of_build() const { return reversed_; }

    Elem zero() const { return zero_vec(field_, dim()); }
    Elem vertex(int i) const;
    Elem arrow(int a) const;
    Elem basis_elem(std::size_t b) const;
    // Normal form of an arbitrary path of the quiver.
    Elem path_elem(const Path& p) const;
    // x*y ("y then x").
    Elem mul(const Elem& x, const Elem& y) const;
    const std::vector<std::pair<std::size_t, Scalar>>& mul_basis(std::size_t i, std::size_t j) const {
        return table_[i * dim() + j];
    }
    bool in_corner(const Elem& x, int from, int to) const;
    std::string path_name(const Path& p) const;
    std::string elem_str(const Elem& x) const;

private:
    friend AlgPtr build_algebra(const Quiver&, const std::vector<Relation>&, Field, BuildOptions);
    friend AlgPtr opposite(const AlgPtr&);

    Field field_;
    Quiver quiver_;
    std::vector<Relation> relations_;
    std::vector<Path> basis_;
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> table_;
    std::map<std::pair<int, std::vector<int>>, Elem> normal_;  // keyed by (src, arrows)
    std::vector<std::vector<std::vector<std::size_t>>> between_;
    std::size_t bound_ = 0;  // paths of this length or longer vanish
    bool reversed_ = false;
    mutable std::weak_ptr<const Algebra> op_weak_;
    mutable AlgPtr op_strong_;

    void index_between();
};

Elem elem_add(const Elem& x, const Elem& y);
Elem elem_scale(const Elem& x, const Scalar& s);
bool elem_is_zero(const Elem& x);

}  // namespace tilt
