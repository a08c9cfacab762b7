#include "envelope.hpp"

#include "albanese/schur_calculus.hpp"
#include "albanese/version.hpp"

namespace albanese::cli {

Json integer_json(const BigInt& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json terms_json(const Decomposition& d, std::optional<int> rank) {
  Json terms = Json::array();
  for (const auto& [b, m] : d.terms()) {
    Json term;
    term["lambda"] = b.covariant.to_string();
    term["mu"] = b.contravariant.to_string();
    term["multiplicity"] = integer_json(m);
    if (rank) term["dim_at_rank"] = integer_json(dim_irrep(b, *rank));
    terms.push_back(std::move(term));
  }
  return terms;
}

Json polynomial_json(const DimensionPolynomial& p) {
  Json out;
  out["text"] = p.to_string();
  out["degree"] = p.degree();
  Json coefficients = Json::array();
  for (const Rational& c : p.coefficients()) coefficients.push_back(c.get_str());
  out["coefficients"] = std::move(coefficients);
  out["valid_from_rank"] = p.valid_from;
  return out;
}

Json Envelope::to_json(bool include_timing) const {
  Json out;
  out["query"] = query;
  out["result"] = result;
  out["provenance"] = provenance;
  out["warnings"] = warnings;
  if (include_timing) out["timing"] = Json{{"elapsed_ms", elapsed_ms}};
  return out;
}

Json make_provenance(const std::string& route, std::optional<int> valid_from_rank, bool conjectural,
                     const std::string& hypothesis) {
  Json out;
  out["route"] = route;
  out["valid_from_rank"] = valid_from_rank ? Json(*valid_from_rank) : Json(nullptr);
  out["conjectural"] = conjectural;
  if (conjectural) out["hypothesis"] = hypothesis;
  out["library_version"] = std::string(kLibraryVersion);
  return out;
}

}  // namespace albanese::cli
