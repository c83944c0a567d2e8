//
// semilab - finite semirings, semimodules and their structure theory
//

// Line-oriented text format.  A file is a sequence of blocks, each opened
// by one of the keywords semiring, semimodule, lattice, map.  Keys take one
// decimal value on their line ("order 3"); tables start with their name on
// a line of its own followed by one line per row.  A semimodule block is
// over the most recent semiring block.  '#' starts a comment.

#ifndef SEMILAB_TEXT_FORMAT_HPP_
#define SEMILAB_TEXT_FORMAT_HPP_

#include <iosfwd>    // for istream
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "catalog.hpp"     // for LatticeSpec
#include "linear_map.hpp"  // for LinearMap
#include "summands.hpp"    // for Decomposition
#include "tables.hpp"      // for SemiringPtr, ModulePtr

namespace semilab {

  //! A map block; source and target index the semimodule blocks of the
  //! same document.
  struct MapSpec {
    std::optional<std::size_t> source;
    std::optional<std::size_t> target;
    std::vector<elem_t>        image;
    std::size_t                line = 0;
  };

  struct Document {
    std::vector<SemiringPtr> semirings;
    std::vector<ModulePtr>   semimodules;
    std::vector<LatticeSpec> lattices;
    std::vector<MapSpec>     maps;
  };

  //! Throws ParseError for malformed input; validation errors of the
  //! algebraic tables (AxiomViolation, ShapeError) propagate unchanged.
  Document parse_document(std::istream& in);
  Document parse_document(std::string const& text);
  //! Throws FileError if \p path cannot be read.
  Document parse_file(std::string const& path);

  std::string format_semiring(SemiringTable const& S);
  std::string format_semimodule(SemimoduleTable const& M);
  std::string format_lattice(LatticeSpec const& L);
  std::string format_map(LinearMap const& f);
  //! One part line and one projection line per summand.
  std::string format_decomposition(Decomposition const& D);

}  // namespace semilab

#endif  // SEMILAB_TEXT_FORMAT_HPP_
