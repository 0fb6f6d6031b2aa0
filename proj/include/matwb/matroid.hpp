#ifndef MATWB_MATROID_HPP
#define MATWB_MATROID_HPP

#include "matwb/matrix.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace matwb {

// Ground sets are limited to this many elements for whole-subset-space
// enumeration (rank tables, circuit scans, partition scans).
inline constexpr int kEnumBound = 24;

using Mask = std::uint32_t;

struct Graph {
  struct Edge {
    std::string u, v, label;
  };
  std::vector<std::string> vertices;
  std::vector<Edge> edges;

  void validate() const;
  size_t vertexIndex(const std::string& name) const;
};

// K_n on vertices "1".."n"; edge u<v is labeled "u-v".
Graph completeGraph(int n);

class Matroid;
using MatroidPtr = std::shared_ptr<const Matroid>;

// Rank oracle over a lexicographically ordered ground set. Subclasses
// provide rankImpl; bulk scans run off a lazily built full rank table.
class Matroid {
public:
  virtual ~Matroid() = default;

  const std::vector<std::string>& ground() const { return ground_; }
  int size() const { return static_cast<int>(ground_.size()); }
  Mask fullMask() const { return size() == 32 ? ~Mask(0) : (Mask(1) << size()) - 1; }

  int indexOf(const std::string& label) const;
  bool hasElement(const std::string& label) const;
  Mask maskOf(const std::vector<std::string>& labels) const;
  std::vector<std::string> labelsOf(Mask m) const;

  int rank(Mask m) const;
  int rank(const std::vector<std::string>& labels) const { return rank(maskOf(labels)); }
  int rank() const { return rank(fullMask()); }

  // 2^|E| ranks indexed by mask; built once, thread-safe.
  const std::vector<std::uint8_t>& rankTable() const;

  Mask closure(Mask m) const;
  bool isFlat(Mask m) const { return closure(m) == m; }
  std::vector<Mask> flats() const;
  bool isIndependent(Mask m) const { return rank(m) == __builtin_popcount(m); }
  bool isDependent(Mask m) const { return !isIndependent(m); }
  bool isCircuit(Mask m) const;
  bool isBasis(Mask m) const;
  std::uint64_t basisCount() const;

  std::vector<Mask> circuits() const;
  std::vector<Mask> cocircuits() const;
  std::vector<Mask> triangles() const;  // 3-element circuits
  std::vector<Mask> triads() const;     // 3-element cocircuits

protected:
  explicit Matroid(std::vector<std::string> groundLabels);
  virtual int rankImpl(Mask m) const = 0;
  // Default table fill queries rankImpl per mask; subclasses with
  // incremental elimination state override.
  virtual void fillTable(std::vector<std::uint8_t>& table) const;

private:
  std::vector<std::string> ground_;
  mutable std::vector<std::uint8_t> table_;
  mutable std::once_flag tableOnce_;
};

// --- constructors -----------------------------------------------------

// Matroid of [I A] on row+column labels. Certified P-matrices use
// finite-field evaluation ranks at three fixed points with mandatory
// agreement (symbolic elimination arbitrates); everything else runs the
// symbolic path. Passing nullopt certifies via a fresh isPMatrix scan.
MatroidPtr linearMatroid(const LabeledMatrix& a, std::optional<bool> certified = std::nullopt);

MatroidPtr graphicMatroid(const Graph& g);

MatroidPtr dualOf(const MatroidPtr& m);

MatroidPtr deleteElements(const MatroidPtr& m, const std::vector<std::string>& s);
MatroidPtr contractElements(const MatroidPtr& m, const std::vector<std::string>& s);
MatroidPtr restrictTo(const MatroidPtr& m, const std::vector<std::string>& keep);

// Explicit rank oracle (used for uniform matroids and amalgam oracles).
MatroidPtr oracleMatroid(std::vector<std::string> groundLabels, std::function<int(Mask)> rankFn);

MatroidPtr uniformMatroid(int r, int n);

// Representation access: non-null for matrix-backed matroids.
const LabeledMatrix* representationOf(const Matroid& m);
const Graph* graphOf(const Matroid& m);

// --- connectivity ------------------------------------------------------

enum class ConnMode { verify2Conn, verify3Conn, verifyInternally4Conn };

struct SeparationWitness {
  std::vector<std::string> sideA, sideB;
  int rankA = 0, rankB = 0;
  int lambda = 0;  // rank(A) + rank(B) - rank(M)
};

struct SeparationReport {
  int k = 0;
  enum class Verdict { kConnected, internally4Connected, violated };
  Verdict verdict = Verdict::violated;
  std::optional<SeparationWitness> witness;
  std::uint64_t partitionsScanned = 0;
};

// Exhaustive bipartition scan (2^(|E|-1) classes). A violation for the
// internally-4-connected mode is a 1- or 2-separation, or a 3-separation
// with both sides of size at least 4.
SeparationReport connectivityScan(const Matroid& m, ConnMode mode);

// Searches the k-separations of M for one inducing the given k-separation
// of the minor N (elements of N carry their M labels).
bool inducedSeparationCheck(const Matroid& m, const Matroid& n,
                            const std::vector<std::string>& xPart,
                            const std::vector<std::string>& yPart, int k);

// --- isomorphism --------------------------------------------------------

struct IsoWitness {
  std::vector<std::pair<std::string, std::string>> bijection;
};

std::optional<IsoWitness> isIsomorphic(const Matroid& m1, const Matroid& m2);

// All isomorphisms m1 -> m2 (element-order lexicographic); automorphisms
// when m1 and m2 coincide.
std::vector<IsoWitness> allIsomorphisms(const Matroid& m1, const Matroid& m2,
                                        size_t limit = 1u << 20);

bool rankOraclesEqual(const Matroid& m1, const Matroid& m2);

}  // namespace matwb

#endif
