#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "geodesy/multigraph.hpp"  // ParseError / DomainError

namespace geodesy {
namespace f2 {

/// Bit-packed vector over F2.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  size_t size() const { return bits_; }
  bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(size_t i, bool value) {
    uint64_t mask = uint64_t(1) << (i & 63);
    if (value)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(size_t i) { words_[i >> 6] ^= uint64_t(1) << (i & 63); }
  void operator^=(const BitVec& other) {
    for (size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  }
  bool is_zero() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }
  size_t popcount() const;
  /// Parity of the AND with another vector of the same size.
  bool dot(const BitVec& other) const;
  std::vector<size_t> ones() const;

  bool operator==(const BitVec&) const = default;

 private:
  size_t bits_ = 0;
  std::vector<uint64_t> words_;
};

/// Chain complex over F2 with string face ids per dimension. Boundary
/// matrices are verified to compose to zero at construction.
class ChainComplexF2 {
 public:
  /// faces[k] lists the k-faces; boundary_of(k, j) must give the (k-1)-face
  /// indices of the j-th k-face.
  ChainComplexF2(std::vector<std::vector<std::string>> face_ids,
                 std::vector<std::vector<std::vector<size_t>>> boundaries);

  int dimension() const { return static_cast<int>(face_ids_.size()) - 1; }
  size_t face_count(int k) const { return face_ids_[k].size(); }
  const std::vector<std::string>& faces(int k) const { return face_ids_[k]; }
  const std::string& face_id(int k, size_t j) const { return face_ids_[k][j]; }
  size_t face_index(int k, const std::string& id) const;

  /// Row j of the boundary matrix of dimension k, i.e. the set of k-faces
  /// containing the j-th (k-1)-face.
  const std::vector<BitVec>& boundary_rows(int k) const { return rows_[k]; }

  /// Max number of d-faces sharing one (d-1)-face (the degree parameter of
  /// the top boundary matrix).
  size_t top_codegree() const;

 private:
  std::vector<std::vector<std::string>> face_ids_;
  std::vector<std::map<std::string, size_t>> face_index_;
  // rows_[k][i]: bit j set iff (k-1)-face i is in the boundary of k-face j.
  std::vector<std::vector<BitVec>> rows_;
};

/// p x q grid of unit squares (dimension 2).
ChainComplexF2 build_grid2d(long p, long q);
/// p x q x r grid of unit cubes (dimension 3).
ChainComplexF2 build_grid3d(long p, long q, long r);
/// The six squares of the unit cube's surface (dimension 2).
ChainComplexF2 build_cube_surface();
/// {"dimension": d, "faces": [[v, ...], ...]} listing top simplices; all
/// lower faces are generated. Repeated vertices in a face are an error.
ChainComplexF2 build_simplicial(const std::string& json_text);

struct ChainF2 {
  int dim = 0;
  BitVec support;
};

/// Chain from explicit face ids (all of dimension k).
ChainF2 make_chain(const ChainComplexF2& x, int k, const std::vector<std::string>& ids);

/// Boundary of a k-chain (k >= 1).
ChainF2 boundary(const ChainComplexF2& x, const ChainF2& f);

bool is_cycle(const ChainComplexF2& x, const ChainF2& c);

/// Thrown when the filling kernel is too large to enumerate.
class KernelCapExceeded : public DomainError {
 public:
  KernelCapExceeded(int dim, int cap)
      : DomainError("kernel dimension " + std::to_string(dim) +
                    " exceeds enumeration cap " + std::to_string(cap)),
        kernel_dim(dim) {}
  int kernel_dim;
};

struct FillingResult {
  size_t m = 0;           // minimal filling size
  mpz_class count;        // number of minimum-weight fillings
  int kernel_dim = 0;
  std::vector<ChainF2> witnesses;  // up to list_cap, smallest coefficient masks
};

/// Minimum-support solutions of boundary(f) = c with f one dimension above c.
/// Solves by dense F2 elimination, then enumerates the solution coset
/// f0 + ker over Gray codes (block-partitioned across jobs; the reduction is
/// deterministic). Requires c to be a cycle; throws DomainError if c is not
/// a boundary and KernelCapExceeded if the kernel is larger than kernel_cap.
FillingResult minimal_fillings(const ChainComplexF2& x, const ChainF2& c,
                               int kernel_cap = 24, size_t list_cap = 16,
                               int jobs = 1);

/// True iff c admits no decomposition into two nonzero disjoint-support
/// cycles; equivalently the nullspace of the boundary matrix restricted to
/// supp(c) is exactly {0, c}. The zero chain is irreducible.
bool is_irreducible(const ChainComplexF2& x, const ChainF2& c);

}  // namespace f2
}  // namespace geodesy
