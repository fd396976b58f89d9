#pragma once

#include "tropgeom/collineation.hpp"
#include "tropgeom/svg.hpp"

#include <json.hpp>

namespace tropgeom {

using Json = nlohmann::ordered_json;

// Scalars travel as exact strings: "p/q" or decimal for finite values, the
// flavor's infinity ("-inf" under MaxPlus, "inf" under MinPlus) for the zero
// element. Integer JSON numbers are accepted on input. Round-trips are
// bit-exact.
Json scalar_to_json(const Semiring& sr, const TropScalar& s);
TropScalar scalar_from_json(const Semiring& sr, const Json& j);

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json vector_to_json(const Semiring& sr, const TropVector& v);
TropVector vector_from_json(const Semiring& sr, const Json& j);

Json matrix_to_json(const Semiring& sr, const TropMatrix& m);
TropMatrix matrix_from_json(const Semiring& sr, const Json& j);

Json point_to_json(const PlanePoint& p);
PlanePoint point_from_json(const Json& j);

Json line_to_json(const Semiring& sr, const TropLine& line);
TropLine line_from_json(const Semiring& sr, const Json& j);

Json pencil_to_json(const Semiring& sr, const Pencil& pencil);
Pencil pencil_from_json(const Semiring& sr, const Json& j);

Json reduced_pencil_to_json(const Semiring& sr, const ReducedPencil& rp);
ReducedPencil reduced_pencil_from_json(const Semiring& sr, const Json& j);

Json perspectivity_to_json(const Semiring& sr, const Perspectivity& p);
Perspectivity perspectivity_from_json(const Semiring& sr, const Json& j);

Json projectivity_to_json(const Semiring& sr, const Projectivity& f);
Projectivity projectivity_from_json(const Semiring& sr, const Json& j);

Json witness_to_json(const Semiring& sr, const NoninvarianceWitness& w);

Json reconstruction_to_json(const Semiring& sr,
                            const ReconstructionReport& report);

Json tp2_report_to_json(const Tp2Report& report);

Flavor flavor_from_json(const Json& scene);
Scene scene_from_json(const Json& j);
Json scene_to_json(const Scene& scene);

}  // namespace tropgeom
