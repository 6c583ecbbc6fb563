#include "goursat/homomorphism.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace goursat {

Homomorphism::Homomorphism(Subgroup domain, Subgroup codomain,
                           std::vector<Element> images)
    : Homomorphism(std::move(domain), std::move(codomain), std::move(images),
                   true) {}

Homomorphism::Homomorphism(Subgroup domain, Subgroup codomain,
                           std::vector<Element> images, bool check)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      images_(std::move(images)) {
  if (images_.size() != domain_.order()) {
    throw std::invalid_argument("image array does not match domain order");
  }
  const auto dm = domain_.members();
  dense_.assign(domain_.parent().order(), -1);
  for (std::size_t i = 0; i < dm.size(); ++i) {
    dense_[static_cast<std::size_t>(dm[i])] = images_[i];
  }
  if (!check) return;

  for (Element y : images_) {
    if (!codomain_.contains(y)) {
      throw std::invalid_argument("image lies outside the codomain");
    }
  }
  const FiniteGroup& dg = domain_.parent();
  const FiniteGroup& cg = codomain_.parent();
  for (std::size_t i = 0; i < dm.size(); ++i) {
    for (std::size_t j = 0; j < dm.size(); ++j) {
      const Element xy = dg.mul(dm[i], dm[j]);
      if (dense_[static_cast<std::size_t>(xy)] != cg.mul(images_[i], images_[j])) {
        throw std::invalid_argument("map is not multiplicative");
      }
    }
  }
}

Homomorphism Homomorphism::trusted(Subgroup domain, Subgroup codomain,
                                   std::vector<Element> images) {
  return Homomorphism(std::move(domain), std::move(codomain), std::move(images),
                      false);
}

Homomorphism Homomorphism::constant(Subgroup domain, Subgroup codomain) {
  std::vector<Element> images(domain.order(), codomain.parent().identity());
  return trusted(std::move(domain), std::move(codomain), std::move(images));
}

Element Homomorphism::operator()(Element x) const {
  if (!domain_.parent().valid(x) || dense_[static_cast<std::size_t>(x)] < 0) {
    throw std::out_of_range("element is not in the homomorphism's domain");
  }
  return dense_[static_cast<std::size_t>(x)];
}

Subgroup Homomorphism::image() const {
  std::vector<Element> im = images_;
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return Subgroup::from_closed_sorted(codomain_.parent_ptr(), std::move(im));
}

Subgroup Homomorphism::kernel() const {
  std::vector<Element> ker;
  const Element e = codomain_.parent().identity();
  const auto dm = domain_.members();
  for (std::size_t i = 0; i < dm.size(); ++i) {
    if (images_[i] == e) ker.push_back(dm[i]);
  }
  return Subgroup::from_closed_sorted(domain_.parent_ptr(), std::move(ker));
}

bool Homomorphism::is_surjective() const {
  return image().order() == codomain_.order();
}

bool Homomorphism::is_injective() const {
  return kernel().order() == 1;
}

bool Homomorphism::is_trivial() const {
  const Element e = codomain_.parent().identity();
  return std::all_of(images_.begin(), images_.end(),
                     [e](Element y) { return y == e; });
}

// --- enumeration ------------------------------------------------------------

namespace {

class HomSearch {
 public:
  HomSearch(const Subgroup& d, const Subgroup& c, MapKind kind,
            const std::function<bool(Homomorphism)>& visit)
      : d_(d), c_(c), kind_(kind), visit_(visit), gens_(generating_set(d)) {
    const FiniteGroup& dg = d_.parent();
    const FiniteGroup& cg = c_.parent();
    map_.assign(dg.order(), -1);
    std::vector<std::size_t> c_orders;
    c_orders.reserve(c_.order());
    for (Element y : c_.members()) c_orders.push_back(element_order(cg, y));
    for (Element g : gens_) {
      const std::size_t og = element_order(dg, g);
      std::vector<Element> options;
      for (std::size_t i = 0; i < c_.order(); ++i) {
        const bool fits = kind_ == MapKind::kBijective ? c_orders[i] == og
                                                       : og % c_orders[i] == 0;
        if (fits) options.push_back(c_.members()[i]);
      }
      candidates_.push_back(std::move(options));
    }
    chosen_.resize(gens_.size());
  }

  void run() {
    if (kind_ == MapKind::kBijective && d_.order() != c_.order()) return;
    if (kind_ == MapKind::kSurjective && d_.order() % c_.order() != 0) return;
    search(0);
  }

 private:
  // Recomputes the map on <gens[0..depth)> from scratch. Returns false on an
  // inconsistency, i.e. the chosen images do not extend to a homomorphism.
  bool extend(std::size_t depth) {
    const FiniteGroup& dg = d_.parent();
    const FiniteGroup& cg = c_.parent();
    for (Element x : touched_) map_[static_cast<std::size_t>(x)] = -1;
    touched_.clear();
    map_[static_cast<std::size_t>(dg.identity())] = cg.identity();
    touched_.push_back(dg.identity());
    for (std::size_t head = 0; head < touched_.size(); ++head) {
      const Element x = touched_[head];
      const Element fx = map_[static_cast<std::size_t>(x)];
      for (std::size_t k = 0; k < depth; ++k) {
        const Element y = dg.mul(x, gens_[k]);
        const Element fy = cg.mul(fx, chosen_[k]);
        Element& slot = map_[static_cast<std::size_t>(y)];
        if (slot < 0) {
          slot = fy;
          touched_.push_back(y);
        } else if (slot != fy) {
          return false;
        }
      }
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == gens_.size()) return emit();
    for (Element y : candidates_[depth]) {
      chosen_[depth] = y;
      if (!extend(depth + 1)) continue;
      if (!search(depth + 1)) return false;
    }
    return true;
  }

  bool emit() {
    if (!extend(gens_.size())) return true;
    if (kind_ != MapKind::kAny) {
      const Subgroup im = generated_subgroup(c_.parent_ptr(), chosen_);
      if (im.order() != c_.order()) return true;
    }
    std::vector<Element> images;
    images.reserve(d_.order());
    for (Element x : d_.members()) images.push_back(map_[static_cast<std::size_t>(x)]);
    return visit_(Homomorphism::trusted(d_, c_, std::move(images)));
  }

  const Subgroup& d_;
  const Subgroup& c_;
  MapKind kind_;
  const std::function<bool(Homomorphism)>& visit_;
  std::vector<Element> gens_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<Element> chosen_;
  std::vector<Element> map_;
  std::vector<Element> touched_;
};

}  // namespace

void for_each_homomorphism(const Subgroup& d, const Subgroup& c, MapKind kind,
                           const std::function<bool(Homomorphism)>& visit,
                           std::size_t max_order) {
  if (d.order() > max_order) throw CapExceeded(d.order(), max_order);
  if (c.order() > max_order) throw CapExceeded(c.order(), max_order);
  HomSearch(d, c, kind, visit).run();
}

std::vector<Homomorphism> enumerate_homomorphisms(const Subgroup& d,
                                                  const Subgroup& c,
                                                  MapKind kind,
                                                  std::size_t max_order) {
  std::vector<Homomorphism> out;
  for_each_homomorphism(
      d, c, kind,
      [&out](Homomorphism h) {
        out.push_back(std::move(h));
        return true;
      },
      max_order);
  std::sort(out.begin(), out.end(), [](const Homomorphism& a, const Homomorphism& b) {
    auto ai = a.images();
    auto bi = b.images();
    return std::lexicographical_compare(ai.begin(), ai.end(), bi.begin(), bi.end());
  });
  return out;
}

std::vector<Homomorphism> enumerate_homomorphisms(const GroupPtr& d,
                                                  const GroupPtr& c,
                                                  MapKind kind,
                                                  std::size_t max_order) {
  return enumerate_homomorphisms(Subgroup::whole(d), Subgroup::whole(c), kind,
                                 max_order);
}

std::optional<Homomorphism> find_isomorphism(const Subgroup& d,
                                             const Subgroup& c) {
  std::optional<Homomorphism> found;
  for_each_homomorphism(d, c, MapKind::kBijective, [&found](Homomorphism h) {
    found.emplace(std::move(h));
    return false;
  });
  return found;
}

bool are_isomorphic(const Subgroup& d, const Subgroup& c) {
  return find_isomorphism(d, c).has_value();
}

}  // namespace goursat
