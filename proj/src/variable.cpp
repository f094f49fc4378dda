#include "thomcalc/variable.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "thomcalc/errors.hpp"

namespace thomcalc {

namespace {

constexpr std::uint64_t kPayloadMask = (std::uint64_t{1} << 56) - 1;
constexpr std::int64_t kIndexOffset = std::int64_t{1} << 31;
constexpr int kMaxPart = 12;
constexpr int kMaxMultiplicity = 15;

std::uint64_t pack(Family f, std::uint64_t payload) {
  return (static_cast<std::uint64_t>(f) << 56) | (payload & kPayloadMask);
}

constexpr std::array<const char*, 9> kNames = {"z", "lambda", "theta", "eta", "c",
                                               "a", "y",      "uhat",  "u"};

}  // namespace

const char* family_name(Family f) { return kNames[static_cast<std::size_t>(f)]; }

Family family_from_name(const std::string& name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (name == kNames[i]) return static_cast<Family>(i);
  }
  throw ParseError("unknown variable family '" + name + "'");
}

Variable Variable::indexed(Family f, int i) {
  if (f == Family::uhat || f == Family::u) {
    throw PreconditionError("family needs a compound index");
  }
  if (f != Family::a && i < 0) {
    throw PreconditionError(std::string("negative index for family ") + family_name(f));
  }
  return Variable(pack(f, static_cast<std::uint64_t>(static_cast<std::int64_t>(i) + kIndexOffset)));
}

Variable Variable::z(int i) { return indexed(Family::z, i); }
Variable Variable::lambda(int i) { return indexed(Family::lambda, i); }
Variable Variable::theta(int i) { return indexed(Family::theta, i); }
Variable Variable::eta(int i) { return indexed(Family::eta, i); }
Variable Variable::c(int i) { return indexed(Family::c, i); }
Variable Variable::a(int i) { return indexed(Family::a, i); }
Variable Variable::y(int i) { return indexed(Family::y, i); }

Variable Variable::uhat(int m, int r, int l) {
  if (m > r) std::swap(m, r);
  if (m < 1 || m + r > l || l > 255) {
    throw PreconditionError("invalid uhat index (" + std::to_string(m) + "," + std::to_string(r) +
                            ";" + std::to_string(l) + ")");
  }
  std::uint64_t payload = (static_cast<std::uint64_t>(l) << 16) |
                          (static_cast<std::uint64_t>(m) << 8) | static_cast<std::uint64_t>(r);
  return Variable(pack(Family::uhat, payload));
}

Variable Variable::u(int l, const std::vector<int>& tau) {
  if (l < 1 || l > 255 || tau.empty()) throw PreconditionError("invalid u index");
  std::array<int, kMaxPart + 1> mult{};
  int sum = 0;
  for (int p : tau) {
    if (p < 1 || p > kMaxPart) throw PreconditionError("u partition part out of range");
    if (++mult[p] > kMaxMultiplicity) throw PreconditionError("u partition multiplicity too large");
    sum += p;
  }
  if (sum > l) throw PreconditionError("u partition sum exceeds level");
  std::uint64_t payload = static_cast<std::uint64_t>(l) << 48;
  // Larger parts occupy higher nibbles so that keys group by largest part.
  for (int p = 1; p <= kMaxPart; ++p) {
    payload |= static_cast<std::uint64_t>(mult[p]) << (4 * (p - 1));
  }
  return Variable(pack(Family::u, payload));
}

int Variable::index() const {
  Family f = family();
  if (f == Family::uhat || f == Family::u) throw PreconditionError("compound-index variable");
  return static_cast<int>(static_cast<std::int64_t>(key_ & kPayloadMask) - kIndexOffset);
}

int Variable::uhat_m() const { return static_cast<int>((key_ >> 8) & 0xff); }
int Variable::uhat_r() const { return static_cast<int>(key_ & 0xff); }
int Variable::uhat_l() const { return static_cast<int>((key_ >> 16) & 0xff); }

int Variable::u_level() const { return static_cast<int>((key_ >> 48) & 0xff); }

std::vector<int> Variable::u_partition() const {
  std::vector<int> parts;
  for (int p = 1; p <= kMaxPart; ++p) {
    int m = static_cast<int>((key_ >> (4 * (p - 1))) & 0xf);
    parts.insert(parts.end(), m, p);
  }
  return parts;
}

std::string Variable::name() const {
  std::ostringstream out;
  switch (family()) {
    case Family::z: out << "z_" << index(); break;
    case Family::lambda: out << "l_" << index(); break;
    case Family::theta: out << "t_" << index(); break;
    case Family::eta: out << "e_" << index(); break;
    case Family::c: out << "c" << index(); break;
    case Family::a: out << "a_" << index(); break;
    case Family::y: out << "y_" << index(); break;
    case Family::uhat:
      out << "u_{" << uhat_m() << "," << uhat_r() << "}^{" << uhat_l() << "}";
      break;
    case Family::u: {
      out << "u[";
      auto parts = u_partition();
      for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? "," : "") << parts[i];
      out << "]^{" << u_level() << "}";
      break;
    }
  }
  return out.str();
}

}  // namespace thomcalc
