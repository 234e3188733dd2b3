#ifndef SIGMA2_IO_HPP
#define SIGMA2_IO_HPP

#include <string>

#include <json.hpp>

#include "sigma2/decompose.hpp"
#include "sigma2/generate.hpp"
#include "sigma2/sympoly.hpp"

namespace sigma2 {

using nlohmann::json;

// Tensor files: {"shape":[...], "entries":["p/q",...]} row-major, or sparse
// {"shape":[...], "coords":[[i,...],...], "values":["p/q",...]}.
Tensor<Rat> tensor_from_json(const json& j);
json tensor_to_json(const Tensor<Rat>& t);

// {"n_vars":n, "degree":d, "terms":[{"exponents":[...], "coeff":"p/q"},...]}
HomPoly poly_from_json(const json& j);
json poly_to_json(const HomPoly& f);

// {"claimed_rank":r, "terms":[{"coeff":s, "vectors":[[s,...],...]},...],
//  "field":{"delta": n | null}}; scalars are "p/q" strings over Q and
// {"a":"p/q","b":"p/q","delta":n} objects over Q(sqrt(delta)).
Decomposition decomposition_from_json(const json& j);
json decomposition_to_json(const Decomposition& d);

json sidecar_to_json(const Sidecar& s);

json classify_report(const Tensor<Rat>& t);
json comon_report(const SymRankReport& r);

json parse_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace sigma2

#endif
