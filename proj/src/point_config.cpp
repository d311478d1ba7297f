#include "vantage/point_config.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "vantage/errors.hpp"

namespace vantage {

PointConfig::PointConfig(int dimension, std::vector<Point> points, bool on_sphere, long radicand)
    : dimension_(dimension), radicand_(radicand), on_sphere_(on_sphere), points_(std::move(points)) {
  if (dimension_ < 1 || dimension_ > 3) throw std::invalid_argument("dimension must be 1, 2 or 3");
  if (radicand_ != 0 && !is_square_free(radicand_)) throw std::invalid_argument("radicand must be square-free");
  if (on_sphere_ && dimension_ != 3) throw std::invalid_argument("sphere configurations need dimension 3");
  for (const auto& p : points_) {
    if (static_cast<int>(p.size()) != dimension_) throw FieldMismatch("point with wrong number of coordinates");
    for (const auto& x : p) {
      if (!x.is_rational() && x.radicand() != radicand_) {
        throw FieldMismatch("coordinate " + x.str() + " is outside field " + field_name());
      }
    }
  }
  std::vector<std::size_t> order(points_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto lex = [&](std::size_t i, std::size_t j) {
    for (int k = 0; k < dimension_; ++k) {
      const int c = canonical_compare(points_[i][k], points_[j][k]);
      if (c != 0) return c;
    }
    return 0;
  };
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return lex(i, j) < 0; });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (lex(order[k - 1], order[k]) == 0) {
      throw std::invalid_argument("points " + std::to_string(std::min(order[k - 1], order[k]) + 1) + " and " +
                                  std::to_string(std::max(order[k - 1], order[k]) + 1) + " coincide");
    }
  }
  if (on_sphere_ && !points_.empty()) {
    auto norm = [](const Point& p) {
      QuadExt s(0);
      for (const auto& x : p) s += x * x;
      return s;
    };
    const QuadExt r = norm(points_[0]);
    if (sign_quad(r) <= 0) throw std::invalid_argument("sphere points must be non-zero");
    for (std::size_t i = 1; i < points_.size(); ++i) {
      if (!(norm(points_[i]) == r)) {
        throw std::invalid_argument("point " + std::to_string(i + 1) + " is not on the common sphere");
      }
    }
  }
}

PointConfig PointConfig::from_rational_1d(const std::vector<Rational>& pts) {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const auto& x : pts) out.push_back({QuadExt(x)});
  return PointConfig(1, std::move(out));
}

PointConfig PointConfig::from_rational_2d(const std::vector<Vec2<Rational>>& pts) {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back({QuadExt(p[0]), QuadExt(p[1])});
  return PointConfig(2, std::move(out));
}

PointConfig PointConfig::from_rational_3d(const std::vector<Vec3<Rational>>& pts, bool on_sphere) {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back({QuadExt(p[0]), QuadExt(p[1]), QuadExt(p[2])});
  return PointConfig(3, std::move(out), on_sphere);
}

std::string PointConfig::field_name() const {
  return radicand_ == 0 ? "Q" : "Q(sqrt" + std::to_string(radicand_) + ")";
}

namespace {

long parse_field(const std::string& value) {
  if (value == "Q") return 0;
  const std::string prefix = "Q(sqrt";
  if (value.size() > prefix.size() + 1 && value.compare(0, prefix.size(), prefix) == 0 && value.back() == ')') {
    const std::string digits = value.substr(prefix.size(), value.size() - prefix.size() - 1);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      const long d = std::stol(digits);
      if (is_square_free(d)) return d;
    }
  }
  throw ParseError("unknown field '" + value + "'");
}

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

}  // namespace

PointConfig PointConfig::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  int dimension = 0;
  long radicand = 0;
  int sphere = -1;
  std::vector<Point> points;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(strip_comment(line));
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (!have_header) {
      for (const auto& tok : tokens) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) throw ParseError("malformed header token '" + tok + "'");
        const std::string key = tok.substr(0, eq);
        const std::string value = tok.substr(eq + 1);
        if (key == "dim") {
          if (value != "1" && value != "2" && value != "3") throw ParseError("dim must be 1, 2 or 3");
          dimension = value[0] - '0';
        } else if (key == "field") {
          radicand = parse_field(value);
        } else if (key == "sphere") {
          if (value != "0" && value != "1") throw ParseError("sphere must be 0 or 1");
          sphere = value[0] - '0';
        } else {
          throw ParseError("unknown header key '" + key + "'");
        }
      }
      if (dimension == 0 || sphere < 0) throw ParseError("header needs dim=, field= and sphere=");
      have_header = true;
      continue;
    }
    if (static_cast<int>(tokens.size()) != dimension) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(dimension) +
                       " coordinates, got " + std::to_string(tokens.size()));
    }
    Point p;
    for (const auto& tok : tokens) {
      QuadExt x = QuadExt::parse(tok);
      if (!x.is_rational() && x.radicand() != radicand) {
        throw ParseError("line " + std::to_string(line_no) + ": scalar " + tok + " is outside the declared field");
      }
      p.push_back(std::move(x));
    }
    points.push_back(std::move(p));
  }
  if (!have_header) throw ParseError("missing configuration header");
  try {
    return PointConfig(dimension, std::move(points), sphere == 1, radicand);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

PointConfig PointConfig::read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string PointConfig::serialize() const {
  std::ostringstream out;
  out << "dim=" << dimension_ << " field=" << field_name() << " sphere=" << (on_sphere_ ? 1 : 0) << "\n";
  for (const auto& p : points_) {
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k) out << ' ';
      out << p[k].str();
    }
    out << "\n";
  }
  return out.str();
}

void PointConfig::write_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << serialize();
}

namespace {

template <class T, class Conv>
std::vector<T> view(const std::vector<PointConfig::Point>& points, int want_dim, int dim, Conv conv) {
  if (dim != want_dim) throw FieldMismatch("configuration has dimension " + std::to_string(dim));
  std::vector<T> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(conv(p));
  return out;
}

const Rational& as_rational(const QuadExt& x) {
  if (!x.is_rational()) throw FieldMismatch("irrational coordinate " + x.str() + " in rational context");
  return x.rational_part();
}

}  // namespace

std::vector<Rational> PointConfig::rational_1d() const {
  return view<Rational>(points_, 1, dimension_, [](const Point& p) { return as_rational(p[0]); });
}

std::vector<Vec2<Rational>> PointConfig::rational_2d() const {
  return view<Vec2<Rational>>(points_, 2, dimension_,
                              [](const Point& p) { return Vec2<Rational>{as_rational(p[0]), as_rational(p[1])}; });
}

std::vector<Vec3<Rational>> PointConfig::rational_3d() const {
  return view<Vec3<Rational>>(points_, 3, dimension_, [](const Point& p) {
    return Vec3<Rational>{as_rational(p[0]), as_rational(p[1]), as_rational(p[2])};
  });
}

std::vector<QuadExt> PointConfig::quad_1d() const {
  return view<QuadExt>(points_, 1, dimension_, [](const Point& p) { return p[0]; });
}

std::vector<Vec2<QuadExt>> PointConfig::quad_2d() const {
  return view<Vec2<QuadExt>>(points_, 2, dimension_, [](const Point& p) { return Vec2<QuadExt>{p[0], p[1]}; });
}

std::vector<Vec3<QuadExt>> PointConfig::quad_3d() const {
  return view<Vec3<QuadExt>>(points_, 3, dimension_,
                             [](const Point& p) { return Vec3<QuadExt>{p[0], p[1], p[2]}; });
}

std::ostream& operator<<(std::ostream& os, const PointConfig& config) { return os << config.serialize(); }

}  // namespace vantage
