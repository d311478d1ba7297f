#include "vantage/ordering.hpp"

#include <algorithm>

#include <sstream>

#include "vantage/errors.hpp"

namespace vantage {

std::vector<int> Ordering::ranks() const {
  std::vector<int> out;
  for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool Ordering::is_strict() const {
  return std::all_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.size() == 1; });
}

std::size_t Ordering::size() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  return n;
}

std::string Ordering::str() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (k) os << ' ';
    if (blocks[k].size() > 1) os << '[';
    for (std::size_t i = 0; i < blocks[k].size(); ++i) {
      if (i) os << ' ';
      os << blocks[k][i];
    }
    if (blocks[k].size() > 1) os << ']';
  }
  return os.str();
}

Ordering Ordering::strict(const std::vector<int>& ranks) {
  Ordering out;
  for (int r : ranks) out.blocks.push_back({r});
  return out;
}

Ordering Ordering::parse(const std::string& text) {
  Ordering out;
  bool open = false;
  std::string num;
  auto flush = [&] {
    if (num.empty()) return;
    if (!open) out.blocks.emplace_back();
    out.blocks.back().push_back(std::stoi(num));
    num.clear();
  };
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      num += c;
    } else if (c == ' ' || c == ',') {
      flush();
    } else if (c == '[') {
      flush();
      if (open) throw ParseError("nested tie block");
      open = true;
      out.blocks.emplace_back();
    } else if (c == ']') {
      flush();
      if (!open) throw ParseError("unbalanced tie block");
      open = false;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in ordering");
    }
  }
  flush();
  if (open) throw ParseError("unterminated tie block");
  std::vector<int> all;
  for (auto& b : out.blocks) {
    if (b.empty()) throw ParseError("empty tie block");
    std::sort(b.begin(), b.end());
    all.insert(all.end(), b.begin(), b.end());
  }
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] != static_cast<int>(i) + 1) throw ParseError("ordering is not a permutation of 1..n");
  }
  return out;
}

Ordering ordering_from_vantage(const PointConfig& config, const PointConfig::Point& vantage) {
  if (static_cast<int>(vantage.size()) != config.dimension()) {
    throw FieldMismatch("vantage point has dimension " + std::to_string(vantage.size()));
  }
  for (const auto& x : vantage) {
    if (!x.is_rational() && x.radicand() != config.radicand()) {
      throw FieldMismatch("vantage coordinate " + x.str() + " is outside field " + config.field_name());
    }
  }
  std::vector<QuadExt> d2;
  for (const auto& p : config.points()) {
    QuadExt s(0);
    for (std::size_t k = 0; k < p.size(); ++k) s += (p[k] - vantage[k]) * (p[k] - vantage[k]);
    d2.push_back(s);
  }
  return ordering_by(d2.size(), [&](int i, int j) { return sign_quad(d2[i] - d2[j]); });
}

}  // namespace vantage
