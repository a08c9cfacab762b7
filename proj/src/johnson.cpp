#include "albanese/johnson.hpp"

#include <json.hpp>

#include <cstdlib>
#include <sstream>

#include "albanese/exact_linalg.hpp"

namespace albanese {

FreeWord::FreeWord(std::vector<int> letters, int rank) : rank_(rank) {
  if (rank < 0) throw InputError("free group rank must be nonnegative");
  for (int letter : letters) {
    if (letter == 0 || std::abs(letter) > rank) {
      throw InputError("generator index " + std::to_string(std::abs(letter)) + " is outside rank " +
                       std::to_string(rank));
    }
    if (!letters_.empty() && letters_.back() == -letter)
      letters_.pop_back();
    else
      letters_.push_back(letter);
  }
}

FreeWord FreeWord::parse(std::string_view text, int rank) {
  std::istringstream in{std::string(text)};
  std::vector<int> letters;
  std::string token;
  while (in >> token) {
    if (token == "1") continue;
    if (token.size() < 2 || token[0] != 'x') throw InputError("cannot parse word token '" + token + "'");
    const auto caret = token.find('^');
    const std::string index_text = token.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
    int exponent = 1;
    int index = 0;
    try {
      std::size_t used = 0;
      index = std::stoi(index_text, &used);
      if (used != index_text.size()) throw std::invalid_argument("trailing");
      if (caret != std::string::npos) {
        const std::string exponent_text = token.substr(caret + 1);
        exponent = std::stoi(exponent_text, &used);
        if (used != exponent_text.size()) throw std::invalid_argument("trailing");
      }
    } catch (const std::logic_error&) {
      throw InputError("cannot parse word token '" + token + "'");
    }
    if (exponent == 0) throw InputError("zero exponent in word token '" + token + "'");
    for (int k = 0; k < std::abs(exponent); ++k) letters.push_back(exponent > 0 ? index : -index);
  }
  return FreeWord(std::move(letters), rank);
}

FreeWord FreeWord::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& letter : out) letter = -letter;
  return FreeWord(std::move(out), rank_);
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  if (a.rank_ != b.rank_) throw InputError("cannot multiply words of different rank");
  std::vector<int> letters = a.letters_;
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return FreeWord(std::move(letters), a.rank_);
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (int letter : letters_) {
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(std::abs(letter));
    if (letter < 0) out += "^-1";
  }
  return out;
}

FreeWord reduce_word(const std::vector<int>& raw, int rank) { return FreeWord(raw, rank); }

namespace {

/// Exact determinant of a small integer matrix by rational elimination.
Rational determinant(std::vector<std::vector<int>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      const Rational factor = a[i][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= factor * a[col][j];
    }
  }
  return det;
}

}  // namespace

FreeEndomorphism::FreeEndomorphism(std::vector<FreeWord> images, bool automorphism)
    : images_(std::move(images)), automorphism_(automorphism) {
  for (const FreeWord& w : images_)
    if (w.rank() != rank()) throw InputError("endomorphism images must live in the same rank");
  if (automorphism_) {
    const Rational det = determinant(abelianization());
    if (det != 1 && det != -1) throw InputError("automorphism data has non-invertible abelianization");
  }
}

FreeEndomorphism FreeEndomorphism::identity(int rank) {
  std::vector<FreeWord> images;
  for (int a = 1; a <= rank; ++a) images.push_back(FreeWord::generator(a, rank));
  return FreeEndomorphism(std::move(images), true);
}

FreeEndomorphism FreeEndomorphism::from_json(std::string_view json, int rank, bool automorphism) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("endomorphism JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("endomorphism JSON must be an object");
  std::vector<FreeWord> images;
  for (int a = 1; a <= rank; ++a) images.push_back(FreeWord::generator(a, rank));
  for (const auto& [key, value] : doc.items()) {
    int index = 0;
    if (key.size() < 2 || key[0] != 'x' || (index = std::atoi(key.c_str() + 1)) < 1 || index > rank ||
        key != "x" + std::to_string(index)) {
      throw InputError("endomorphism JSON key '" + key + "' is not a generator of rank " + std::to_string(rank));
    }
    if (!value.is_string()) throw InputError("endomorphism JSON values must be word strings");
    images[static_cast<std::size_t>(index - 1)] = FreeWord::parse(value.get<std::string>(), rank);
  }
  return FreeEndomorphism(std::move(images), automorphism);
}

std::vector<std::vector<int>> FreeEndomorphism::abelianization() const {
  const std::size_t n = images_.size();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (int letter : images_[a].letters()) m[static_cast<std::size_t>(std::abs(letter) - 1)][a] += letter > 0 ? 1 : -1;
  return m;
}

std::string FreeEndomorphism::to_string() const {
  std::string out = "{";
  for (std::size_t a = 0; a < images_.size(); ++a) {
    if (a) out += ", ";
    out += "x" + std::to_string(a + 1) + " -> " + images_[a].to_string();
  }
  return out + "}";
}

FreeWord apply_endo(const FreeEndomorphism& f, const FreeWord& w) {
  if (f.rank() != w.rank()) throw InputError("apply_endo: rank mismatch");
  std::vector<int> letters;
  for (int letter : w.letters()) {
    const FreeWord& image = f.image(std::abs(letter));
    const FreeWord piece = letter > 0 ? image : image.inverse();
    letters.insert(letters.end(), piece.letters().begin(), piece.letters().end());
  }
  return FreeWord(std::move(letters), w.rank());
}

FreeEndomorphism compose(const FreeEndomorphism& f, const FreeEndomorphism& g) {
  if (f.rank() != g.rank()) throw InputError("compose: rank mismatch");
  std::vector<FreeWord> images;
  for (const FreeWord& w : g.images()) images.push_back(apply_endo(f, w));
  return FreeEndomorphism(std::move(images), f.is_automorphism() && g.is_automorphism());
}

bool is_ia(const FreeEndomorphism& f) {
  if (!f.is_automorphism()) throw InputError("is_ia: endomorphism is not flagged as an automorphism");
  const auto m = f.abelianization();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

std::vector<FreeEndomorphism> magnus_generators(int n) {
  if (n < 3) throw InputError("magnus_generators: rank must be at least 3");
  std::vector<FreeEndomorphism> out;
  const auto x = [n](int a) { return FreeWord::generator(a, n); };
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (a == b) continue;
      std::vector<FreeWord> images;
      for (int k = 1; k <= n; ++k) images.push_back(k == a ? x(b) * x(a) * x(b).inverse() : x(k));
      out.emplace_back(std::move(images), true);
    }
  }
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      for (int c = b + 1; c <= n; ++c) {
        if (b == a || c == a) continue;
        std::vector<FreeWord> images;
        for (int k = 1; k <= n; ++k)
          images.push_back(k == a ? x(a) * x(b) * x(c) * x(b).inverse() * x(c).inverse() : x(k));
        out.emplace_back(std::move(images), true);
      }
    }
  }
  return out;
}

BigInt JohnsonValue::coefficient(int a, int b, int c) const {
  if (b == c) return 0;
  const auto& image = images_.at(static_cast<std::size_t>(a - 1));
  auto it = image.find({std::min(b, c), std::max(b, c)});
  if (it == image.end()) return 0;
  return b < c ? it->second : BigInt(-it->second);
}

void JohnsonValue::add(int a, int b, int c, const BigInt& value) {
  if (a < 1 || a > rank() || b < 1 || b > rank() || c < 1 || c > rank())
    throw InputError("JohnsonValue: index out of range");
  if (b == c || value == 0) return;
  auto& image = images_[static_cast<std::size_t>(a - 1)];
  const std::pair<int, int> key{std::min(b, c), std::max(b, c)};
  BigInt& cell = image[key];
  cell += b < c ? value : BigInt(-value);
  if (cell == 0) image.erase(key);
}

bool JohnsonValue::is_zero() const {
  for (const auto& image : images_)
    if (!image.empty()) return false;
  return true;
}

JohnsonValue& JohnsonValue::operator+=(const JohnsonValue& other) {
  if (other.rank() != rank()) throw InputError("JohnsonValue: rank mismatch");
  for (int a = 1; a <= rank(); ++a)
    for (const auto& [bc, v] : other.image(a)) add(a, bc.first, bc.second, v);
  return *this;
}

std::string JohnsonValue::to_string() const {
  std::string out;
  for (int a = 1; a <= rank(); ++a) {
    if (a > 1) out += "; ";
    out += "e" + std::to_string(a) + " -> ";
    const auto& image = this->image(a);
    if (image.empty()) {
      out += "0";
      continue;
    }
    bool first = true;
    for (const auto& [bc, v] : image) {
      if (!first) out += v < 0 ? " - " : " + ";
      else if (v < 0) out += "-";
      first = false;
      const BigInt magnitude = abs(v);
      if (magnitude != 1) out += magnitude.get_str() + "*";
      out += "e" + std::to_string(bc.first) + "^e" + std::to_string(bc.second);
    }
  }
  return out;
}

std::map<std::pair<int, int>, BigInt> wedge_class(const FreeWord& w) {
  const int n = w.rank();
  // running[b] = signed count of x_b occurrences seen so far.
  std::vector<long> running(static_cast<std::size_t>(n) + 1, 0);
  std::map<std::pair<int, int>, BigInt> out;
  for (int letter : w.letters()) {
    const int c = std::abs(letter);
    const long sign = letter > 0 ? 1 : -1;
    for (int b = 1; b < c; ++b) {
      if (running[static_cast<std::size_t>(b)] == 0) continue;
      out[{b, c}] += running[static_cast<std::size_t>(b)] * sign;
    }
    running[static_cast<std::size_t>(c)] += sign;
  }
  for (long total : running)
    if (total != 0) throw InputError("wedge_class: word is not in the commutator subgroup");
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

JohnsonValue johnson_tau(const FreeEndomorphism& f) {
  if (!is_ia(f)) throw InputError("johnson_tau: endomorphism is not in IA_n");
  JohnsonValue out(f.rank());
  for (int a = 1; a <= f.rank(); ++a) {
    const FreeWord w = f.image(a) * FreeWord::generator(a, f.rank()).inverse();
    for (const auto& [bc, v] : wedge_class(w)) out.add(a, bc.first, bc.second, v);
  }
  return out;
}

std::size_t tau_span_dim(int n) {
  const auto generators = magnus_generators(n);
  std::map<std::tuple<int, int, int>, std::size_t> coordinate;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) coordinate.emplace(std::tuple{a, b, c}, coordinate.size());
  ExactLinearMap m(coordinate.size(), generators.size());
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const JohnsonValue tau = johnson_tau(generators[g]);
    for (int a = 1; a <= n; ++a)
      for (const auto& [bc, v] : tau.image(a)) m.add(coordinate.at({a, bc.first, bc.second}), g, Rational(v));
  }
  return m.rank();
}

void Cochain::set(const FreeEndomorphism& g, JohnsonValue value) {
  for (auto& [key, v] : values_) {
    if (key == g) {
      v = std::move(value);
      return;
    }
  }
  values_.emplace_back(g, std::move(value));
}

const JohnsonValue& Cochain::at(const FreeEndomorphism& g) const {
  for (const auto& [key, v] : values_)
    if (key == g) return v;
  throw InputError("cochain is not defined on " + g.to_string());
}

Cochain Cochain::johnson(const std::vector<FreeEndomorphism>& domain) {
  Cochain out;
  for (const FreeEndomorphism& g : domain) out.set(g, johnson_tau(g));
  return out;
}

Rational pairing_eval(const Cochain& c, const FreeEndomorphism& g, const DualIndex& x) {
  const JohnsonValue& value = c.at(g);
  for (int index : x)
    if (index < 1 || index > value.rank()) throw InputError("pairing_eval: index outside rank");
  const auto [u, v, w] = x;
  // e_b∧e_c contributes +1 to e_b⊗e_c, so e_w⊗e_v carries the e_w∧e_v coefficient.
  return Rational(value.coefficient(u, w, v));
}

Rational pairing_eval(const Cochain& c, const FreeEndomorphism& g, const std::map<DualIndex, Rational>& x) {
  Rational total = 0;
  for (const auto& [index, coefficient] : x) total += coefficient * pairing_eval(c, g, index);
  return total;
}

}  // namespace albanese
