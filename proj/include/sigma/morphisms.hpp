#ifndef SIGMA_MORPHISMS_HPP
#define SIGMA_MORPHISMS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sigma/diff_ring.hpp"

namespace sigma {

enum class Tri { No, Yes, Unknown };
inline const char* tri_name(Tri t) {
  switch (t) {
    case Tri::No: return "false";
    case Tri::Yes: return "true";
    case Tri::Unknown: return "unknown";
  }
  return "unknown";
}

// A morphism of difference algebraic groups, given by the dual assignment:
// one difference polynomial in the source coordinates per primary target
// coordinate (matrix entries and torus/additive coordinates; inverse markers
// are derived). Pullback images of inverse coordinates are certified modulo
// the source ideal and cached.
class MorphismSpec {
 public:
  MorphismSpec(GroupSpec source, GroupSpec target,
               std::map<std::pair<unsigned, unsigned>, Polynomial> assignment);

  const GroupSpec& source() const { return src_; }
  const GroupSpec& target() const { return tgt_; }
  const std::map<std::pair<unsigned, unsigned>, Polynomial>& assignment() const {
    return assign_;
  }

  // Max shift used by any assignment polynomial.
  unsigned assignment_order() const;

  // Image of one target coordinate under the dual map (shift applied last).
  // Inverse coordinates trigger a NotInvertible error when no inverse exists
  // modulo the source ideal at the certification level.
  const Polynomial& coordinate_image(unsigned factor, unsigned coord) const;

  // Dual map on an arbitrary polynomial in the target coordinates.
  Polynomial pull_back(const Polynomial& p) const;

 private:
  GroupSpec src_, tgt_;
  std::map<std::pair<unsigned, unsigned>, Polynomial> assign_;
  mutable std::map<std::pair<unsigned, unsigned>, Polynomial> cache_;
};

// Identity embedding of a subgroup into a larger group on the same ambient.
MorphismSpec identity_embedding(const GroupSpec& sub, const GroupSpec& target);

// Inverse of u modulo the ideal, when one exists.
std::optional<Polynomial> invert_mod(const Polynomial& u, const std::vector<Polynomial>& gens,
                                     const std::vector<VarId>& universe);

struct MorphismCheck {
  bool ok = false;
  std::vector<std::string> failures;
};

// Counit match, target relations pulled into the source ideal, and
// comultiplication compatibility on the primary coordinates.
MorphismCheck validate_morphism(const MorphismSpec& phi, unsigned level);

// Kernel of the dual map up to level i, i.e. the defining ideal of the image
// closure, computed from prolongation level N. N >= i + assignment order.
IdealBasis image_ideal(const MorphismSpec& phi, unsigned i, unsigned N);

// Same with the prolongation level scanned until the contraction settles.
IdealBasis image_closure(const MorphismSpec& phi, unsigned i, const ClosureOptions& opt = {});

// Preimage of the trivial subgroup: source generators plus the pulled-back
// augmentation generators of the target.
GroupSpec kernel_group(const MorphismSpec& phi);

// Source generators plus pulled-back generators of Z. AmbientMismatch when Z
// does not live on the target ambient.
GroupSpec preimage_group(const MorphismSpec& phi, const GroupSpec& z);

// No when the kernel visibly misses part of the augmentation ideal; Yes when
// every source coordinate up to the bound certifiably lies in the image
// subalgebra of the dual map.
Tri is_injective(const MorphismSpec& phi, unsigned bound, const ClosureOptions& opt = {});

// Yes when the image closure matches the target ideal at every level up to
// the bound; No when it strictly exceeds it somewhere.
Tri is_surjective(const MorphismSpec& phi, unsigned bound, const ClosureOptions& opt = {});

struct Factorization {
  GroupSpec image;          // subgroup of the target ambient
  MorphismSpec surjection;  // source onto the image
  MorphismSpec embedding;   // image into the target
  bool stabilized = false;  // image generators sigma-generate within the bound
};

Factorization factorize(const MorphismSpec& phi, unsigned bound, const ClosureOptions& opt = {});

}  // namespace sigma

#endif
