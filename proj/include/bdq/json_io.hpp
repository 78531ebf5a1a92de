#pragma once

#include "bdq/bdtriple.hpp"
#include "bdq/centralizer.hpp"
#include "bdq/orders.hpp"
#include "bdq/rmatrix.hpp"
#include "bdq/twisted.hpp"

#include <json.hpp>

namespace bdq {

using Json = nlohmann::json;

// LaurentPoly as {"<exponent>": "num/den", ...}
Json laurent_to_json(const Laurent& x);
Laurent laurent_from_json(const Json& j);

Json triple_to_json(const AdmissibleTriple& t);
AdmissibleTriple triple_from_json(const Json& j);

Json matk_to_json(const MatK& m); // array of rows of Laurent strings
MatK matk_from_json(const Json& j);

Json qmat_to_json(const QMat& m); // array of rows of "p/q" strings
QMat qmat_from_json(const Json& j);

Json intmat_to_json(const IntMat& m);
IntMat intmat_from_json(const Json& j);

Json strings_to_json(const StringDecomposition& s);
Json shape_to_json(const CentralizerShape& s);
Json report_row_to_json(const ReportRow& r);

Json coset2_to_json(const CosetForm2& f);
Json coset3_to_json(const CosetForm3& f);
CosetForm3 coset3_from_json(const Json& j);

Json twistcheck_to_json(const TwistCheck& c);

// Sparse triples [basisIndexA, basisIndexB, "p/q"], ordered.
Json tensor2_to_json(const Tensor2& r);
Tensor2 tensor2_from_json(const Json& j, int dim);

// CLI-facing parsers.
IndexForm form_from_string(const std::string& csv); // "a,b,c,d" Laurent literals
CosetForm3 coset3_from_string(const std::string& s); // "i,j,q"

} // namespace bdq
