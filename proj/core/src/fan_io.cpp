#include "camfan/fan_io.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "camfan/errors.hpp"

namespace camfan {

using nlohmann::json;

namespace {

json ray_to_json(const CoxeterGroup& g, const Ray& ray) {
  json r;
  r["coords"] = json::array();
  for (const auto& x : ray.v) r["coords"].push_back(x.str());
  if (ray.label >= 0) r["label"] = apr_label(g, ray.label);
  if (ray.w != kNoElement) {
    json prov;
    prov["w"] = g.word_str(ray.w);
    prov["J"] = json::array();
    for (GenIndex s : gen_list(ray.J)) prov["J"].push_back(g.label(s));
    r["provenance"] = prov;
  }
  return r;
}

Apr apr_from_label(const CoxeterGroup& g, const std::string& label) {
  bool negative = !label.empty() && label[0] == '-';
  size_t open = label.find('[');
  size_t close = label.rfind(']');
  if (open == std::string::npos || close == std::string::npos || close < open)
    fail(Errc::ParseError, "bad root label: " + label);
  std::string word = label.substr(open + 1, close - open - 1);
  if (negative) {
    auto s = g.gen_by_label(word);
    if (!s) fail(Errc::ParseError, "unknown generator in label: " + label);
    return apr_neg_simple(g, *s);
  }
  // Parse a concatenation of generator labels.
  std::vector<GenIndex> letters;
  size_t pos = 0;
  while (pos < word.size()) {
    bool matched = false;
    for (int s = 0; s < g.rank(); ++s) {
      const std::string& l = g.label(s);
      if (word.compare(pos, l.size(), l) == 0) {
        letters.push_back(s);
        pos += l.size();
        matched = true;
        break;
      }
    }
    if (!matched) fail(Errc::ParseError, "bad reflection word in label: " + label);
  }
  ElementId t = g.from_word(letters);
  auto idx = g.reflection_index(t);
  if (!idx) fail(Errc::ParseError, "label is not a reflection: " + label);
  return *idx;
}

}  // namespace

std::string fan_to_json(const CoxeterGroup& g, const Fan& fan) {
  json j;
  j["field"] = g.radicand() == 5 ? "sqrt5" : "rational";
  j["basis"] = "simple_roots";
  j["rays"] = json::array();
  for (const auto& ray : fan.rays) j["rays"].push_back(ray_to_json(g, ray));
  j["cones"] = fan.cones;
  j["adjacency"] = json::array();
  for (const auto& w : fan.walls) j["adjacency"].push_back({w[0], w[1]});
  return j.dump(2) + "\n";
}

Fan fan_from_json(const CoxeterGroup& g, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::ParseError, std::string("invalid fan JSON: ") + e.what());
  }
  std::string field = j.value("field", "rational");
  int expected_d = field == "sqrt5" ? 5 : 0;
  if (expected_d != g.radicand()) fail(Errc::ParseError, "fan field does not match the group");
  Fan fan;
  fan.support = full_gen_set(g.rank());
  for (const auto& rj : j.at("rays")) {
    Ray ray;
    for (const auto& cs : rj.at("coords")) {
      std::string s = cs.get<std::string>();
      Scalar v;
      if (s.find("\xe2\x88\x9a") != std::string::npos || s.find("sqrt") != std::string::npos)
        v = Scalar::parse(s, g.radicand());
      else
        v = Scalar::parse(s, 0);
      ray.v.push_back(v);
    }
    if (rj.contains("label")) ray.label = apr_from_label(g, rj["label"].get<std::string>());
    if (rj.contains("provenance")) {
      const auto& prov = rj["provenance"];
      std::string wstr = prov.at("w").get<std::string>();
      if (wstr == "1") {
        ray.w = g.identity();
      } else {
        std::vector<GenIndex> letters;
        size_t pos = 0;
        while (pos < wstr.size()) {
          bool matched = false;
          for (int s = 0; s < g.rank(); ++s) {
            const std::string& l = g.label(s);
            if (wstr.compare(pos, l.size(), l) == 0) {
              letters.push_back(s);
              pos += l.size();
              matched = true;
              break;
            }
          }
          if (!matched) fail(Errc::ParseError, "bad provenance word: " + wstr);
        }
        ray.w = g.from_word(letters);
      }
      for (const auto& lbl : prov.at("J")) {
        auto s = g.gen_by_label(lbl.get<std::string>());
        if (!s) fail(Errc::ParseError, "unknown generator in provenance");
        ray.J = gen_insert(ray.J, *s);
      }
    }
    fan.rays.push_back(std::move(ray));
  }
  for (const auto& cj : j.at("cones")) fan.cones.push_back(cj.get<std::vector<int>>());
  for (const auto& aj : j.at("adjacency"))
    fan.walls.push_back({aj.at(0).get<int>(), aj.at(1).get<int>()});
  return fan;
}

namespace {

struct Vec3 {
  double x = 0, y = 0, z = 0;
};

Vec3 normalize(Vec3 v) {
  double n = std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
  return {v.x / n, v.y / n, v.z / n};
}

double dot3(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 combine(Vec3 a, double ta, Vec3 b, double tb) {
  return {ta * a.x + tb * b.x, ta * a.y + tb * b.y, ta * a.z + tb * b.z};
}

}  // namespace

std::string fan_to_svg(const CoxeterGroup& g, const Fan& fan) {
  if (g.rank() != 3) fail(Errc::UsageError, "SVG export is implemented for rank 3 only");

  // Euclidean coordinates via a Cholesky factor of the form (numeric; the
  // picture is presentation only).
  double B[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) B[i][j] = g.form().at(i, j).to_double();
  double E[3][3] = {{0}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = B[i][j];
      for (int k = 0; k < j; ++k) s -= E[i][k] * E[j][k];
      if (i == j)
        E[i][i] = std::sqrt(s);
      else
        E[i][j] = s / E[j][j];
    }
  }
  auto embed = [&](const Vec& v) {
    double c[3] = {v[0].to_double(), v[1].to_double(), v[2].to_double()};
    // x = E^T c gives <x,x> = c^T B c.
    Vec3 r;
    r.x = E[0][0] * c[0] + E[1][0] * c[1] + E[2][0] * c[2];
    r.y = E[1][1] * c[1] + E[2][1] * c[2];
    r.z = E[2][2] * c[2];
    return normalize(r);
  };

  Vec3 pole = embed(g.fundamental_weight(0));
  pole = {-pole.x, -pole.y, -pole.z};
  // Orthonormal basis of the plane orthogonal to the pole.
  Vec3 seed = std::fabs(pole.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  Vec3 e1 = normalize(combine(seed, 1.0, pole, -dot3(seed, pole)));
  Vec3 e2 = {pole.y * e1.z - pole.z * e1.y, pole.z * e1.x - pole.x * e1.z,
             pole.x * e1.y - pole.y * e1.x};

  auto project = [&](Vec3 u) {
    double denom = 1.0 - dot3(u, pole);
    double px = dot3(u, e1) / denom;
    double py = dot3(u, e2) / denom;
    return std::pair<double, double>(512.0 + 160.0 * px, 512.0 - 160.0 * py);
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1024\" height=\"1024\" "
         "viewBox=\"0 0 1024 1024\">\n";
  svg << "  <rect width=\"1024\" height=\"1024\" fill=\"white\"/>\n";
  const int samples = 48;
  for (const auto& wall : fan.walls) {
    std::vector<int> shared;
    std::set_intersection(fan.cones[wall[0]].begin(), fan.cones[wall[0]].end(),
                          fan.cones[wall[1]].begin(), fan.cones[wall[1]].end(),
                          std::back_inserter(shared));
    if (shared.size() != 2) continue;
    Vec3 a = embed(fan.rays[shared[0]].v);
    Vec3 b = embed(fan.rays[shared[1]].v);
    double ang = std::acos(std::max(-1.0, std::min(1.0, dot3(a, b))));
    svg << "  <path d=\"";
    bool pen_down = false;
    for (int k = 0; k <= samples; ++k) {
      double t = static_cast<double>(k) / samples;
      Vec3 u;
      if (ang < 1e-9) {
        u = a;
      } else {
        double sa = std::sin((1 - t) * ang) / std::sin(ang);
        double sb = std::sin(t * ang) / std::sin(ang);
        u = normalize(combine(a, sa, b, sb));
      }
      if (1.0 - dot3(u, pole) < 1e-6) {
        pen_down = false;  // point at the projection pole; break the path
        continue;
      }
      auto [px, py] = project(u);
      if (std::fabs(px - 512) > 4096 || std::fabs(py - 512) > 4096) {
        pen_down = false;
        continue;
      }
      svg << (pen_down ? "L" : "M") << px << " " << py << " ";
      pen_down = true;
    }
    svg << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace camfan
