#include "albanese/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "albanese/types.hpp"

namespace albanese {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InputError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InputError("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_padded(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw InputError("empty partition text (use \"0\")");
  if (text == "0") return Partition();
  std::vector<int> parts;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto token = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
      throw InputError("malformed partition text: '" + std::string(token) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw InputError("trailing comma in partition text");
  }
  return Partition(std::move(parts));
}

Partition Partition::column(int k) { return Partition(std::vector<int>(static_cast<std::size_t>(k), 1)); }

Partition Partition::row(int k) { return k == 0 ? Partition() : Partition(std::vector<int>{k}); }

Partition Partition::conjugate() const {
  std::vector<int> conj(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
  for (int part : parts_)
    for (int j = 0; j < part; ++j) ++conj[static_cast<std::size_t>(j)];
  return Partition(std::move(conj));
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (std::size_t i = 0; i < other.parts_.size(); ++i)
    if (other.parts_[i] > parts_[i]) return false;
  return true;
}

std::vector<Partition> Partition::add_box() const {
  std::vector<Partition> out;
  for (std::size_t i = 0; i <= parts_.size(); ++i) {
    int current = (*this)[i];
    if (i == 0 || (*this)[i - 1] > current) {
      auto parts = parts_;
      if (i == parts.size()) parts.push_back(1);
      else ++parts[i];
      out.emplace_back(std::move(parts));
    }
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<Partition> Partition::remove_box() const {
  std::vector<Partition> out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if ((*this)[i] > (*this)[i + 1]) {
      auto parts = parts_;
      --parts[i];
      out.push_back(from_padded(std::move(parts)));
    }
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Bipartition Bipartition::parse(std::string_view text) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos) {
    throw InputError("bipartition text must look like \"2,1|1\"");
  }
  return {Partition::parse(text.substr(0, bar)), Partition::parse(text.substr(bar + 1))};
}

std::string Bipartition::to_string() const { return covariant.to_string() + "|" + contravariant.to_string(); }

namespace {

void collect_partitions(int remaining, int max_part, int slots_left, std::vector<int>& prefix,
                        std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (slots_left == 0) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    collect_partitions(remaining - part, part, slots_left - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int k, std::optional<int> max_length) {
  if (k < 0) throw InputError("partitions_of: k must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  collect_partitions(k, k, max_length.value_or(k), prefix, out);
  return out;
}

}  // namespace albanese
