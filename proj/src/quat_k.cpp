#include "a4csl/quat_k.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace a4csl {

bool Quat::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const KNum& x) { return x.is_zero(); });
}

Quat& Quat::operator+=(const Quat& o) {
  for (size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

Quat& Quat::operator-=(const Quat& o) {
  for (size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

Quat operator*(const Quat& p, const Quat& q) {
  const auto& [a1, b1, c1, d1] = p.c_;
  const auto& [a2, b2, c2, d2] = q.c_;
  return Quat(a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
              a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
              a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
              a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2);
}

Quat operator*(const KNum& s, const Quat& q) {
  return Quat(s * q.c_[0], s * q.c_[1], s * q.c_[2], s * q.c_[3]);
}

Quat conj_q(const Quat& q) { return Quat(q[0], -q[1], -q[2], -q[3]); }

KNum nr(const Quat& q) { return inner(q, q); }

KNum tr(const Quat& q) { return q[0] + q[0]; }

Quat twist(const Quat& q) { return Quat(q[0].conj(), q[1].conj(), q[3].conj(), q[2].conj()); }

Quat phi_plus(const Quat& x) { return x + twist(x); }

Quat mul(const Quat& p, const Quat& q) { return p * q; }

Quat inverse(const Quat& q) {
  if (q.is_zero()) throw DomainError("inverse of the zero quaternion");
  return nr(q).inverse() * conj_q(q);
}

KNum inner(const Quat& x, const Quat& y) {
  return x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + x[3] * y[3];
}

std::string to_string(const Quat& q) {
  return "(" + to_string(q[0]) + ", " + to_string(q[1]) + ", " + to_string(q[2]) + ", " +
         to_string(q[3]) + ")";
}

Quat parse_quat(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty() || s.back() != ')') throw ParseError("quaternion must end with ')': '" + s + "'");
  // find the '(' matching the final ')'
  int depth = 0;
  size_t open = std::string::npos;
  for (size_t i = s.size(); i-- > 0;) {
    if (s[i] == ')') ++depth;
    else if (s[i] == '(' && --depth == 0) {
      open = i;
      break;
    }
  }
  if (open == std::string::npos) throw ParseError("unbalanced parentheses in '" + s + "'");
  std::vector<std::string> parts;
  std::string cur;
  depth = 0;
  for (size_t i = open + 1; i + 1 < s.size(); ++i) {
    char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 4) throw ParseError("quaternion needs 4 components: '" + s + "'");
  std::array<KNum, 4> comps;
  for (size_t i = 0; i < 4; ++i) comps[i] = parse_knum(parts[i]);
  Quat q(comps);
  std::string prefix = s.substr(0, open);
  while (!prefix.empty() && std::isspace(static_cast<unsigned char>(prefix.back()))) prefix.pop_back();
  if (!prefix.empty()) {
    if (prefix.back() == '*') prefix.pop_back();
    q = parse_knum(prefix) * q;
  }
  return q;
}

}  // namespace a4csl
