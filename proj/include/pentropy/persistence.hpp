#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pentropy/alpha.hpp"

namespace pentropy {

struct Bar {
    int dim = 0;
    double birth = 0.0;
    double death = 0.0;  // +infinity for essential classes

    bool is_infinite() const;
    double length() const { return death - birth; }
    friend bool operator==(const Bar&, const Bar&) = default;
};

/// Multiset of birth-death intervals, dims 0 and 1. Kept sorted by
/// (dim, birth, death) so multiset comparisons are plain equality.
struct Barcode {
    std::vector<Bar> bars;

    std::vector<Bar> dim_bars(int dim) const;
    void sort_canonical();
    friend bool operator==(const Barcode&, const Barcode&) = default;
};

struct PersistencePair {
    Simplex birth_simplex;
    std::optional<Simplex> death_simplex;  // none: essential class
    int dim = 0;
    double birth = 0.0;
    double death = 0.0;  // +infinity when essential
};

/// Persistence of the filtration by boundary-matrix column reduction over
/// Z/2. Simplices are totally ordered by (value, dim, vertex list). The
/// returned barcode discards zero-length intervals; the pairs variant keeps
/// every pairing, including zero-length ones and essential classes.
/// Throws if the filtration is not monotone, naming the face/coface pair.
Barcode compute_persistence(const FilteredComplex& fc);
std::vector<PersistencePair> compute_persistence_pairs(const FilteredComplex& fc);

/// Independent dim-0 oracle: union-find with the elder rule (on a merge the
/// component whose creating vertex entered later dies; ties fall back to the
/// same simplex order as compute_persistence). Returns only dim-0 bars.
Barcode dim0_union_find(const FilteredComplex& fc);

/// CSV with header "dim,birth,death"; infinite deaths serialize as "inf".
/// Round-trips exactly.
std::string write_barcode_csv(const Barcode& b);
Barcode read_barcode_csv(std::string_view text);

}  // namespace pentropy
