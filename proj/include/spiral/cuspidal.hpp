#pragma once

// Registry of cuspidal data: a pseudo-Levi type, a distinguished orbit given by even
// weighted Dynkin marks, and an opaque label for the local system.

#include "spiral/pseudolevi.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace spiral {

struct CuspidalDatum {
    std::string levi_type;  // canonical label, "T" for the torus
    IntVec orbit_marks;     // one per simple root, canonical component order then Bourbaki order
    std::string system_label;
    std::string notes;
    bool builtin = false;
};

CuspidalDatum torus_datum();

/// Parses a JSON array of {leviType, orbitMarks, systemLabel, notes?}; empty text is an empty array.
/// The torus datum is prepended. Throws SchemaError, DuplicateDatum, OddGrading, NotDistinguished.
std::vector<CuspidalDatum> parse_registry(const std::string& text);
std::vector<CuspidalDatum> load_registry(const std::string& path);

/// First datum whose type matches; nullopt if none.
std::optional<CuspidalDatum> find_datum(const std::vector<CuspidalDatum>& registry, const std::string& levi_type);

struct CuspidalCertificate {
    CuspidalDatum datum;
    PseudoLevi levi;
    Vec h;  // apartment vector with <beta_j, h> = mark_j on the simple roots of R_E
    AlgebraElement representative;
    std::size_t rank = 0;
    std::size_t degree_two_dim = 0;
    int attempts = 0;
};

/// Throws TypeMismatch, OddGrading, NotDistinguished, GenericityFailure.
CuspidalCertificate validate_datum(const RootDatum& d, const CuspidalDatum& datum, const RelevantSubspace& E,
                                   std::uint64_t seed = 0);

/// c_H over the walls of the E-alcove A.
std::vector<int> c_parameters(const RootDatum& d, const RelevantSubspace& E, const Facet& A,
                              const CuspidalDatum& datum, std::uint64_t seed = 0);

}  // namespace spiral
