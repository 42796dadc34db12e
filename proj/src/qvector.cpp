#include "stratkit/qvector.hpp"

namespace stratkit {

QVector QVector::unit(int p, const Q& c) {
  QVector v;
  v.set(p, c);
  return v;
}

Q QVector::get(int p) const {
  auto it = e_.find(p);
  return it == e_.end() ? Q(0) : it->second;
}

void QVector::set(int p, const Q& c) {
  if (c == 0) e_.erase(p);
  else e_[p] = c;
}

void QVector::add(int p, const Q& c) { set(p, get(p) + c); }

std::vector<int> QVector::support() const {
  std::vector<int> s;
  for (const auto& [p, c] : e_) s.push_back(p);
  return s;
}

QVector& QVector::operator+=(const QVector& o) {
  for (const auto& [p, c] : o.e_) add(p, c);
  return *this;
}

QVector& QVector::operator-=(const QVector& o) {
  for (const auto& [p, c] : o.e_) add(p, -c);
  return *this;
}

QVector operator*(const Q& s, const QVector& v) {
  QVector out;
  if (s == 0) return out;
  for (const auto& [p, c] : v.e_) out.e_[p] = s * c;
  return out;
}

bool QVector::non_negative() const {
  for (const auto& [p, c] : e_)
    if (c < 0) return false;
  return true;
}

bool QVector::leq_componentwise(const QVector& o) const { return (o - *this).non_negative(); }

QVec QVector::on_chain(const Chain& c) const {
  QVec out;
  for (int p : c) out.push_back(get(p));
  return out;
}

QVector QVector::from_chain(const Chain& c, const QVec& coeffs) {
  if (c.size() != coeffs.size()) throw ShapeError("coefficient count differs from chain length");
  QVector v;
  for (size_t i = 0; i < c.size(); ++i) v.add(c[i], coeffs[i]);
  return v;
}

int lex_compare(const QVector& a, const QVector& b, const TotalOrder& order) {
  for (int p : order.order) {
    Q x = a.get(p), y = b.get(p);
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

std::string format(const QVector& v, const GradedPoset& poset, const TotalOrder& order) {
  if (v.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (int p : order.order) {
    Q c = v.get(p);
    if (c == 0) continue;
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    Q a = abs(c);
    if (a != 1) s += to_string(a) + " ";
    s += "e_" + poset.label(p);
    first = false;
  }
  return s;
}

std::string format(const QVector& v, const GradedPoset& poset) { return format(v, poset, linearize(poset)); }

nlohmann::json to_json(const QVector& v, const GradedPoset& poset) {
  nlohmann::json entries = nlohmann::json::array();
  for (int p : linearize(poset).order) {
    Q c = v.get(p);
    if (c == 0) continue;
    entries.push_back({{"element", poset.label(p)}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  }
  return {{"entries", entries}};
}

QVector qvector_from_json(const nlohmann::json& j, const GradedPoset& poset) {
  QVector v;
  try {
    for (const auto& e : j.at("entries")) {
      auto text = [](const nlohmann::json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
      Q c = parse_q(text(e.at("num")) + "/" + text(e.at("den")));
      v.add(poset.id(e.at("element").get<std::string>()), c);
    }
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("bad vector json: ") + e.what());
  }
  return v;
}

}  // namespace stratkit
