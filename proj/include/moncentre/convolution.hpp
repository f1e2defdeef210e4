#pragma once

#include <array>
#include <functional>
#include <map>
#include <vector>

#include "moncentre/fincat.hpp"
#include "moncentre/monoidal.hpp"
#include "moncentre/parallel.hpp"

namespace moncentre {

/// A functor into finite sets: object a ↦ {0, …, sets[a]-1}, morphism f ↦ action[f].
struct SetFunctor {
  CategoryPtr base;
  std::vector<int> sets;
  std::vector<std::vector<int>> action;

  bool operator==(const SetFunctor& o) const { return sets == o.sets && action == o.action; }
};

/// Functoriality: endpoints, identities, composition.
Report validate_set_functor(const SetFunctor& f);

/// Natural map F ⇒ G given by one function per object.
struct SetMap {
  std::vector<std::vector<int>> components;
};

Report validate_set_map(const SetFunctor& f, const SetFunctor& g, const SetMap& m);
bool is_bijective(const SetMap& m, const SetFunctor& f, const SetFunctor& g);
SetMap identity_set_map(const SetFunctor& f);
/// n ∘ m
SetMap compose_set_maps(const SetMap& n, const SetMap& m);

/// Hom(b, −), elements indexed by position in hom(b, a).
SetFunctor representable(const CategoryPtr& base, ObjId b);
SetFunctor empty_set_functor(const CategoryPtr& base);

/// A coend class generator (b, c, h : b⊗c → a, s ∈ F b, t ∈ G c).
using Generator = std::array<int, 5>;

/// (F ⊗ G)(a) = ∫^{b,c} Hom(b⊗c, a) × F b × G c, computed as the quotient of
/// the generators by (b, c, h'∘(f⊗g), s, t) ~ (b', c', h', Ff s, Gg t).
/// Classes are numbered in order of their least generator.
struct Convolution {
  SetFunctor functor;
  std::vector<std::vector<Generator>> generators;        // per object a
  std::vector<std::vector<int>> class_of;                // per a, generator → class
  std::vector<std::vector<int>> representative;          // per a, class → generator
  std::vector<std::map<Generator, int>> generator_index;  // per a

  /// Class of the generator (b, c, h, s, t) at a.
  int class_at(ObjId a, const Generator& g) const { return class_of[a][generator_index[a].at(g)]; }
};

Convolution day_convolve(const SetFunctor& f, const SetFunctor& g, const MonoidalStructure& b,
                         ExecPolicy policy = ExecPolicy::parallel);

/// The representable at the unit object.
SetFunctor convolution_unit(const MonoidalStructure& b);

/// A map out of a convolution defined on generators. Reports every generator
/// whose image differs from that of its class representative.
struct InducedMap {
  SetMap map;
  Report well_defined;
};
InducedMap induce_from_generators(const Convolution& c,
                                  const std::function<int(ObjId a, const Generator& g)>& image);

/// y_b ⊗ y_c → y_{b⊗c}, [h, s, t] ↦ h∘(s⊗t).
InducedMap yoneda_map(const MonoidalStructure& b, ObjId x, ObjId y, const Convolution& conv);

/// F ⊗ G → G ⊗ F, [b, c, h, s, t] ↦ [c, b, h∘c_{c,b}, t, s].
InducedMap convolution_braiding(const MonoidalStructure& b, const Braiding& c, const Convolution& fg,
                                const Convolution& gf);

/// (F⊗G)⊗H → F⊗(G⊗H), [d, e, h, [b, c, k, s, t], w] ↦ [b, c⊗e, h∘(k⊗1)∘α⁻¹, s, [c, e, 1, t, w]].
InducedMap convolution_associator(const MonoidalStructure& b, const Convolution& fg, const Convolution& fg_h,
                                  const Convolution& gh, const Convolution& f_gh);

/// J⊗F → F and F⊗J → F.
InducedMap convolution_left_unitor(const MonoidalStructure& b, const SetFunctor& f, const Convolution& jf);
InducedMap convolution_right_unitor(const MonoidalStructure& b, const SetFunctor& f, const Convolution& fj);

/// φ ⊗ ψ : F⊗G → F'⊗G'.
InducedMap convolve_maps(const SetMap& phi, const SetMap& psi, const Convolution& fg, const Convolution& fg2);

}  // namespace moncentre
