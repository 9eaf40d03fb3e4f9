#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "errors.hpp"
#include "simplex.hpp"

namespace morsenorm {

/// Index of a simplex inside a Complex. Indices follow canonical order, so
/// `a < b` on indices agrees with `a < b` on the simplices themselves.
using SimplexIndex = std::size_t;

/// A finite simplicial complex together with its face poset.
///
/// Immutable once built. Every simplex has a dense index in canonical
/// order; face and coface lists are stored as index lists, each sorted.
class Complex {
public:
    /// Downward closure of `facets`. Vertex lists need not be sorted;
    /// duplicate facets and faces collapse.
    static Complex from_facets(const std::vector<std::vector<VertexId>>& facets) {
        if (facets.empty()) {
            throw Error("empty complex");
        }
        std::set<Simplex> closure;
        std::vector<Simplex> work;
        for (const auto& facet : facets) {
            if (facet.empty()) {
                throw Error("empty facet");
            }
            work.push_back(Simplex::from_vertices(facet));
        }
        while (!work.empty()) {
            Simplex s = std::move(work.back());
            work.pop_back();
            if (closure.contains(s)) {
                continue;
            }
            for (auto& face : s.boundary()) {
                if (!closure.contains(face)) {
                    work.push_back(std::move(face));
                }
            }
            closure.insert(std::move(s));
        }
        return Complex(std::vector<Simplex>(closure.begin(), closure.end()));
    }

    std::size_t size() const { return simplices_.size(); }
    const std::vector<Simplex>& simplices() const { return simplices_; }
    const Simplex& at(SimplexIndex i) const { return simplices_.at(i); }
    int dimension() const { return simplices_.empty() ? -1 : simplices_.back().dimension(); }

    bool contains(const Simplex& s) const { return index_.contains(s); }

    /// Throws "unknown simplex [..]" if `s` is not in the complex.
    SimplexIndex index_of(const Simplex& s) const {
        auto it = index_.find(s);
        if (it == index_.end()) {
            throw Error("unknown simplex " + s.to_list_string());
        }
        return it->second;
    }

    const std::vector<SimplexIndex>& faces(SimplexIndex i) const { return faces_.at(i); }
    const std::vector<SimplexIndex>& cofaces(SimplexIndex i) const { return cofaces_.at(i); }

    /// Simplices not properly contained in any other simplex.
    std::vector<Simplex> facets() const {
        std::vector<Simplex> out;
        for (SimplexIndex i = 0; i < size(); ++i) {
            if (cofaces_[i].empty()) {
                out.push_back(simplices_[i]);
            }
        }
        return out;
    }

    std::vector<Simplex> immediate_faces(const Simplex& s) const { return lookup(faces_[index_of(s)]); }
    std::vector<Simplex> immediate_cofaces(const Simplex& s) const { return lookup(cofaces_[index_of(s)]); }

    /// Number of immediate-face pairs σ ≺ τ.
    std::size_t incidence_count() const {
        std::size_t n = 0;
        for (const auto& f : faces_) n += f.size();
        return n;
    }

private:
    explicit Complex(std::vector<Simplex> sorted) : simplices_(std::move(sorted)) {
        faces_.resize(simplices_.size());
        cofaces_.resize(simplices_.size());
        for (SimplexIndex i = 0; i < simplices_.size(); ++i) {
            index_.emplace(simplices_[i], i);
        }
        for (SimplexIndex i = 0; i < simplices_.size(); ++i) {
            for (const auto& face : simplices_[i].boundary()) {
                SimplexIndex j = index_.at(face);
                faces_[i].push_back(j);
                cofaces_[j].push_back(i);
            }
        }
        // Faces come out of boundary() in canonical order already; cofaces
        // are appended in increasing i.
    }

    std::vector<Simplex> lookup(const std::vector<SimplexIndex>& ids) const {
        std::vector<Simplex> out;
        out.reserve(ids.size());
        for (auto id : ids) out.push_back(simplices_[id]);
        return out;
    }

    std::vector<Simplex> simplices_;
    std::map<Simplex, SimplexIndex> index_;
    std::vector<std::vector<SimplexIndex>> faces_;
    std::vector<std::vector<SimplexIndex>> cofaces_;
};

inline Complex build_complex(const std::vector<std::vector<VertexId>>& facets) {
    return Complex::from_facets(facets);
}

inline std::vector<Simplex> immediate_faces(const Complex& k, const Simplex& s) { return k.immediate_faces(s); }
inline std::vector<Simplex> immediate_cofaces(const Complex& k, const Simplex& s) { return k.immediate_cofaces(s); }

}  // namespace morsenorm
