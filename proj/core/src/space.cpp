#include "capkit/space.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace capkit {
namespace {

std::int64_t parse_integer(std::string_view text, std::string_view whole) {
  std::int64_t out = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError("malformed value '" + std::string(whole) + "'");
  }
  return out;
}

}  // namespace

UnitValue::UnitValue(const Rational& r) : value_(r) {
  if (r < Rational(0) || r > Rational(1)) throw DomainError("value " + r.str() + " outside [0,1]");
}

UnitValue parse_value(std::string_view text) {
  if (text.empty()) throw ParseError("empty value");
  Rational r;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::int64_t p = parse_integer(text.substr(0, slash), text);
    const std::int64_t q = parse_integer(text.substr(slash + 1), text);
    if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    r = Rational(p, q);
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = text.substr(0, dot);
    const std::string_view frac_part = text.substr(dot + 1);
    if (frac_part.size() > 9) throw ParseError("more than 9 fractional digits in '" + std::string(text) + "'");
    if (int_part.empty() && frac_part.empty()) throw ParseError("malformed value '" + std::string(text) + "'");
    if (!std::all_of(frac_part.begin(), frac_part.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
      throw ParseError("malformed value '" + std::string(text) + "'");
    }
    const std::int64_t whole = int_part.empty() ? 0 : parse_integer(int_part, text);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    const std::int64_t frac = frac_part.empty() ? 0 : parse_integer(frac_part, text);
    if (whole < 0 || (int_part.size() > 0 && int_part.front() == '-')) {
      throw DomainError("value '" + std::string(text) + "' outside [0,1]");
    }
    r = Rational(whole) + Rational(frac, scale);
  } else {
    r = Rational(parse_integer(text, text));
  }
  if (r < Rational(0) || r > Rational(1)) throw DomainError("value '" + std::string(text) + "' outside [0,1]");
  return UnitValue(r);
}

std::string render_value(const UnitValue& v) { return v.str(); }

// ---------------------------------------------------------------------------

GroundSet::GroundSet(std::vector<std::string> names) {
  if (names.empty()) throw DomainError("ground set must have at least one element");
  if (names.size() > kMaskWidth) {
    throw DomainError("ground set of size " + std::to_string(names.size()) + " exceeds mask width " +
                      std::to_string(kMaskWidth));
  }
  std::set<std::string_view> seen;
  for (const auto& n : names) {
    if (n.empty()) throw DomainError("element names must be non-empty");
    if (!seen.insert(n).second) throw DomainError("duplicate element name '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

GroundSet GroundSet::indices(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return GroundSet(std::move(names));
}

const std::vector<std::string>& GroundSet::names() const {
  static const std::vector<std::string> kEmpty;
  return names_ ? *names_ : kEmpty;
}

std::size_t GroundSet::index_of(std::string_view name) const {
  const auto& ns = names();
  const auto it = std::find(ns.begin(), ns.end(), name);
  if (it == ns.end()) throw DomainError("unknown element '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - ns.begin());
}

bool GroundSet::contains(std::string_view name) const {
  const auto& ns = names();
  return std::find(ns.begin(), ns.end(), name) != ns.end();
}

Subset GroundSet::subset_of_names(std::span<const std::string> names) const {
  Subset s;
  for (const auto& n : names) s = s.with(index_of(n));
  return s;
}

std::vector<std::string> GroundSet::names_of(Subset s) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (s.contains(i)) out.push_back(name(i));
  }
  return out;
}

std::string GroundSet::describe(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!s.contains(i)) continue;
    if (!first) out += ',';
    out += name(i);
    first = false;
  }
  return out + "}";
}

GroundSet GroundSet::restrict(Subset s) const { return GroundSet(names_of(s)); }

bool operator==(const GroundSet& a, const GroundSet& b) {
  return a.names_ == b.names_ || a.names() == b.names();
}

void require_same_ground(const GroundSet& a, const GroundSet& b, std::string_view what) {
  if (!(a == b)) throw DomainError(std::string(what) + ": ground set mismatch");
}

// ---------------------------------------------------------------------------

Observable::Observable(GroundSet ground, std::vector<UnitValue> values)
    : ground_(std::move(ground)), values_(std::move(values)) {
  if (values_.size() != ground_.size()) {
    throw DomainError("observable has " + std::to_string(values_.size()) + " values for a ground set of size " +
                      std::to_string(ground_.size()));
  }
}

Observable Observable::constant(const GroundSet& ground, const UnitValue& v) {
  return Observable(ground, std::vector<UnitValue>(ground.size(), v));
}

Observable Observable::indicator(const GroundSet& ground, Subset s) {
  std::vector<UnitValue> values(ground.size());
  for (std::size_t i = 0; i < ground.size(); ++i) values[i] = s.contains(i) ? UnitValue::one() : UnitValue::zero();
  return Observable(ground, std::move(values));
}

UnitValue Observable::min_on(Subset s) const {
  if (s.is_empty()) throw DomainError("min over the empty set");
  UnitValue best = UnitValue::one();
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (s.contains(i)) best = std::min(best, values_[i]);
  }
  return best;
}

UnitValue Observable::max_on(Subset s) const {
  UnitValue best = UnitValue::zero();
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (s.contains(i)) best = std::max(best, values_[i]);
  }
  return best;
}

Observable Observable::meet(const UnitValue& alpha) const {
  std::vector<UnitValue> out(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(), [&](const UnitValue& v) { return std::min(v, alpha); });
  return Observable(ground_, std::move(out));
}

Observable Observable::join(const UnitValue& alpha) const {
  std::vector<UnitValue> out(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(), [&](const UnitValue& v) { return std::max(v, alpha); });
  return Observable(ground_, std::move(out));
}

bool Observable::leq(const Observable& o) const {
  require_same_ground(ground_, o.ground_, "observable order");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] > o.values_[i]) return false;
  }
  return true;
}

Subset upset_threshold(const Observable& phi, const UnitValue& alpha) {
  Subset s;
  for (std::size_t i = 0; i < phi.ground().size(); ++i) {
    if (phi(i) >= alpha) s = s.with(i);
  }
  return s;
}

// ---------------------------------------------------------------------------

SpaceMap::SpaceMap(GroundSet domain, GroundSet codomain, std::vector<std::size_t> image)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), image_(std::move(image)) {
  if (image_.size() != domain_.size()) throw DomainError("map must assign an image to every domain element");
  for (const auto y : image_) {
    if (y >= codomain_.size()) throw DomainError("map image index out of range");
  }
}

SpaceMap SpaceMap::identity(const GroundSet& ground) {
  std::vector<std::size_t> image(ground.size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = i;
  return SpaceMap(ground, ground, std::move(image));
}

SpaceMap SpaceMap::inclusion(const GroundSet& ground, Subset s) {
  if (s.is_empty()) throw DomainError("inclusion of the empty subset");
  std::vector<std::size_t> image;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (s.contains(i)) image.push_back(i);
  }
  return SpaceMap(ground.restrict(s), ground, std::move(image));
}

SpaceMap SpaceMap::compose(const SpaceMap& outer, const SpaceMap& inner) {
  require_same_ground(inner.codomain_, outer.domain_, "map composition");
  std::vector<std::size_t> image(inner.image_.size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = outer.image_[inner.image_[i]];
  return SpaceMap(inner.domain_, outer.codomain_, std::move(image));
}

Subset SpaceMap::image(Subset s) const {
  Subset out;
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (s.contains(i)) out = out.with(image_[i]);
  }
  return out;
}

Subset SpaceMap::preimage(Subset s) const {
  Subset out;
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (s.contains(image_[i])) out = out.with(i);
  }
  return out;
}

bool SpaceMap::injective() const {
  Subset seen;
  for (const auto y : image_) {
    if (seen.contains(y)) return false;
    seen = seen.with(y);
  }
  return true;
}

}  // namespace capkit
