#include "albanese/homology.hpp"

#include <set>

#include "albanese/memo.hpp"
#include "albanese/partition.hpp"
#include "albanese/schur_calculus.hpp"

namespace albanese {

std::string to_string(Variant v) { return v == Variant::Full ? "full" : "outer"; }

Variant parse_variant(std::string_view text) {
  if (text == "full") return Variant::Full;
  if (text == "outer") return Variant::Outer;
  throw InputError("variant must be 'full' or 'outer'");
}

Bipartition GeneratorType::shape() const {
  if (kind == Kind::Corolla) return {Partition::column(degree + 1), Partition::column(1)};
  return {Partition::column(degree), Partition()};
}

std::string GeneratorType::to_string() const {
  return (kind == Kind::Corolla ? "corolla" : "wheel") + std::to_string(degree);
}

void GeneratorMultiset::add(GeneratorType type, int count) {
  if (type.degree < 1) throw InputError("generator degree must be at least 1");
  if (count > 0) counts_[type] += count;
}

int GeneratorMultiset::total_degree() const {
  int total = 0;
  for (const auto& [type, count] : counts_) total += type.degree * count;
  return total;
}

int GeneratorMultiset::covariant_size() const {
  int total = 0;
  for (const auto& [type, count] : counts_) total += type.shape().covariant.size() * count;
  return total;
}

int GeneratorMultiset::contravariant_size() const {
  int total = 0;
  for (const auto& [type, count] : counts_)
    if (type.kind == GeneratorType::Kind::Corolla) total += count;
  return total;
}

int GeneratorMultiset::cardinality() const {
  int total = 0;
  for (const auto& [type, count] : counts_) total += count;
  return total;
}

std::string GeneratorMultiset::to_string() const {
  std::string out = "{";
  for (const auto& [type, count] : counts_) {
    if (out.size() > 1) out += ", ";
    out += type.to_string();
    if (count > 1) out += "^" + std::to_string(count);
  }
  return out + "}";
}

namespace {

void collect_multisets(const std::vector<GeneratorType>& types, std::size_t index, int remaining,
                       GeneratorMultiset& current, std::vector<GeneratorMultiset>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  if (index == types.size()) return;
  const GeneratorType type = types[index];
  for (int count = remaining / type.degree; count >= 0; --count) {
    GeneratorMultiset next = current;
    next.add(type, count);
    collect_multisets(types, index + 1, remaining - count * type.degree, next, out);
  }
}

MemoTable<std::pair<int, Variant>, Decomposition>& w_memo() {
  static MemoTable<std::pair<int, Variant>, Decomposition> table;
  return table;
}

}  // namespace

std::vector<GeneratorMultiset> generator_multisets(int degree, Variant variant) {
  if (degree < 0) throw InputError("degree must be nonnegative");
  std::vector<GeneratorType> types;
  for (int l = 1; l <= degree; ++l) {
    types.push_back({GeneratorType::Kind::Corolla, l});
    if (!(variant == Variant::Outer && l == 1)) types.push_back({GeneratorType::Kind::Wheel, l});
  }
  std::vector<GeneratorMultiset> out;
  GeneratorMultiset empty;
  collect_multisets(types, 0, degree, empty, out);
  return out;
}

Decomposition multiset_contribution(const GeneratorMultiset& multiset, std::stop_token stop) {
  PlethysmOptions options;
  options.stop = stop;
  Decomposition product = Decomposition::unit();
  product.grade = 0;
  for (const auto& [type, count] : multiset.counts()) {
    product = traceless_product(product, graded_symmetric_power(type.shape(), type.degree, count, options));
  }
  return product;
}

Decomposition generator_u(int i) {
  if (i < 1) throw InputError("generator_u: i must be at least 1");
  Decomposition out;
  out.add(GeneratorType{GeneratorType::Kind::Corolla, i}.shape(), 1);
  out.add(GeneratorType{GeneratorType::Kind::Wheel, i}.shape(), 1);
  out.grade = i;
  return out;
}

Decomposition generator_u_out(int i) {
  if (i < 1) throw InputError("generator_u_out: i must be at least 1");
  if (i >= 2) return generator_u(i);
  Decomposition out = Decomposition::irreducible(GeneratorType{GeneratorType::Kind::Corolla, 1}.shape());
  out.grade = 1;
  return out;
}

Decomposition albanese_w(int i, Variant variant, std::stop_token stop) {
  if (i < 0) throw InputError("albanese_w: degree must be nonnegative");
  if (auto hit = w_memo().find({i, variant})) return *hit;
  Decomposition total;
  for (const GeneratorMultiset& multiset : generator_multisets(i, variant)) {
    if (stop.stop_requested()) throw Cancelled();
    total += multiset_contribution(multiset, stop);
  }
  total.grade = i;
  total.valid_from = 3 * i;
  return w_memo().insert({i, variant}, std::move(total));
}

std::vector<std::pair<int, int>> constituent_support(int i) {
  if (i < 1) throw InputError("constituent_support: i must be at least 1");
  std::set<std::pair<int, int>> pairs;
  const Decomposition w = albanese_w(i);
  for (const auto& [b, m] : w.terms()) pairs.emplace(b.covariant.size(), b.contravariant.size());
  return {pairs.begin(), pairs.end()};
}

bool verify_io_splitting(int i) {
  if (i < 1) throw InputError("verify_io_splitting: i must be at least 1");
  Decomposition rhs = albanese_w(i, Variant::Outer);
  rhs += tensor_by_standard(albanese_w(i - 1, Variant::Outer));
  return albanese_w(i, Variant::Full) == rhs;
}

DimensionPolynomial albanese_dim_polynomial(int i, Variant variant) {
  DimensionPolynomial poly = dim_polynomial(albanese_w(i, variant));
  if (poly.degree() != 3 * i) {
    throw ConsistencyError("dimension polynomial of W_" + std::to_string(i) + " has degree " +
                           std::to_string(poly.degree()) + ", expected " + std::to_string(3 * i));
  }
  poly.valid_from = std::max(poly.valid_from, 3 * i);
  return poly;
}

BigInt tautological_monomials(int l) {
  if (l < 0 || l % 4 != 0) return 0;
  return static_cast<unsigned long>(partitions_of(l / 4).size());
}

ConjecturalDimension conjectural_cohomology_dim(int i) {
  if (i < 0) throw InputError("conjectural_cohomology_dim: degree must be nonnegative");
  ConjecturalDimension out;
  for (int k = 0; k <= i; ++k) {
    const BigInt monomials = tautological_monomials(i - k);
    if (monomials == 0) continue;
    out.polynomial += albanese_dim_polynomial(k).scaled(Rational(monomials));
  }
  out.polynomial.valid_from = 3 * i;
  return out;
}

Decomposition primitive_part(int i) {
  if (i < 1) throw InputError("primitive_part: i must be at least 1");
  Decomposition out;
  for (const GeneratorMultiset& multiset : generator_multisets(i, Variant::Full)) {
    if (multiset.cardinality() == 1) out += multiset_contribution(multiset);
  }
  out.grade = i;
  return out;
}

}  // namespace albanese
