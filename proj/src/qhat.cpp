#include <algorithm>
#include <cstdlib>
#include <fstream>

#include "thomcalc/errors.hpp"
#include "thomcalc/partitions.hpp"
#include "thomcalc/polynomial_io.hpp"
#include "thomcalc/thom.hpp"

namespace thomcalc {

namespace {

std::map<int, Polynomial> builtin_qhats() {
  std::map<int, Polynomial> q;
  q[1] = Polynomial(1);
  q[2] = Polynomial(1);
  q[3] = Polynomial(1);
  q[4] = zform({{1, 2}, {2, 1}, {4, -1}}).to_polynomial();
  q[5] = zform({{1, 2}, {2, 1}, {5, -1}}).to_polynomial() *
         parse_polynomial("2*z_1^2 + 3*z_1*z_2 - 2*z_1*z_5 + 2*z_2*z_3 - z_2*z_4 - z_2*z_5 - z_3*z_4 + z_4*z_5");
  return q;
}

void validate_qhat(int d, const Polynomial& q) {
  if (d < 1) throw PreconditionError("Qhat degree index must be positive");
  if (q.is_zero()) throw PreconditionError("Qhat_" + std::to_string(d) + " is zero");
  for (Variable v : q.variables()) {
    if (v.family() != Family::z || v.index() < 1 || v.index() > d) {
      throw PreconditionError("Qhat_" + std::to_string(d) + " involves " + v.name());
    }
  }
  if (!q.is_polynomial() || !q.is_homogeneous()) {
    throw InhomogeneousInput("Qhat_" + std::to_string(d) + " is not a homogeneous polynomial");
  }
  if (q.degree() != deg_Qhat(d)) {
    throw PreconditionError("Qhat_" + std::to_string(d) + " has degree " + std::to_string(q.degree()) +
                            ", expected " + std::to_string(deg_Qhat(d)));
  }
}

}  // namespace

QhatRegistry::QhatRegistry() : builtin_(builtin_qhats()) {}

bool QhatRegistry::has(int d) const { return plugins_.count(d) || builtin_.count(d); }

const Polynomial& QhatRegistry::get(int d) const {
  if (auto it = plugins_.find(d); it != plugins_.end()) return it->second;
  if (auto it = builtin_.find(d); it != builtin_.end()) return it->second;
  throw MissingQhat("no Qhat registered for d = " + std::to_string(d));
}

void QhatRegistry::register_plugin(int d, Polynomial q) {
  validate_qhat(d, q);
  plugins_[d] = std::move(q);
}

int QhatRegistry::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open Qhat file " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in " + path.string() + ": " + e.what());
  }
  Polynomial q = polynomial_from_json(j.contains("poly") ? j["poly"] : j);
  int d = 0;
  if (j.contains("d")) {
    d = j["d"].get<int>();
  } else {
    for (Variable v : q.variables()) {
      if (v.family() == Family::z) d = std::max(d, v.index());
    }
  }
  register_plugin(d, std::move(q));
  return d;
}

std::vector<int> QhatRegistry::load_directory(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<int> loaded;
  for (const auto& f : files) loaded.push_back(load_file(f));
  return loaded;
}

QhatRegistry QhatRegistry::from_environment() {
  QhatRegistry r;
  if (const char* dir = std::getenv("THOMCALC_QHAT_DIR"); dir && *dir) r.load_directory(dir);
  return r;
}

std::vector<int> QhatRegistry::available() const {
  std::vector<int> ds;
  for (const auto& [d, q] : builtin_) ds.push_back(d);
  for (const auto& [d, q] : plugins_) {
    if (!builtin_.count(d)) ds.push_back(d);
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

Polynomial qhat(int d) {
  static const QhatRegistry registry;
  return registry.get(d);
}

}  // namespace thomcalc
