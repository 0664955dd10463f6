#pragma once

#include <json.hpp>

#include <string>

#include "rankcrit/constructions.hpp"
#include "rankcrit/criticality.hpp"
#include "rankcrit/lie.hpp"
#include "rankcrit/matrix_space.hpp"

namespace rankcrit {

// insertion-ordered so reports are byte-identical across runs
using Json = nlohmann::ordered_json;

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j);

Json matrix_space_to_json(const MatrixSpace& a);
MatrixSpace matrix_space_from_json(const Json& j);

Json certificate_to_json(const CriticalityCertificate& c);

Json witness_to_json(const CompressionWitness& w);

Json algebra_to_json(const LieAlgebra& g);
LiePtr algebra_from_json(const Json& j);

Json representation_to_json(const Representation& rho);
Representation representation_from_json(const Json& j);

Json report_to_json(const MultiplicityReport& r);
/// Aligned text table, one line per highest weight with both multiplicities.
std::string report_to_text(const MultiplicityReport& r);

Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace rankcrit
