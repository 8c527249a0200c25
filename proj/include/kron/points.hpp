#pragma once

#include <functional>
#include <vector>

#include "kron/cr_system.hpp"
#include "kron/face.hpp"

namespace kron {

/// Visits every integer point of the system in lexicographic order of the
/// flattened entries (level-major, then row-major).
void for_each_point(const CRSystem& sys, const std::function<void(const Tensor3&)>& visit);

/// Number of integer points; with a filter, only points on the face (or on
/// any face of a union) are counted, each point once.
Count count_points(const CRSystem& sys);
Count count_points(const CRSystem& sys, const FacePredicate& filter);

/// Point count on a union of faces plus how many points lie on each member.
struct FaceHits {
    Count total = 0;
    std::vector<Count> per_member;
};
FaceHits count_face_hits(const CRSystem& sys, const FacePredicate& face_union);

std::vector<Tensor3> enumerate_points(const CRSystem& sys);

} // namespace kron
