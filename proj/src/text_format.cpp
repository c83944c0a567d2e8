//
// semilab - finite semirings, semimodules and their structure theory
//

#include "semilab/text_format.hpp"

#include <algorithm>  // for find
#include <cctype>     // for isdigit
#include <charconv>   // for from_chars
#include <fstream>    // for ifstream
#include <map>        // for map
#include <sstream>    // for istringstream, ostringstream

#include "semilab/errors.hpp"  // for ParseError, FileError

namespace semilab {

  namespace {
    struct Line {
      std::size_t              number;
      std::vector<std::string> tokens;
    };

    bool is_block_keyword(std::string const& t) {
      return t == "semiring" || t == "semimodule" || t == "lattice"
             || t == "map";
    }

    bool is_table_keyword(std::string const& t) {
      return t == "add" || t == "mul" || t == "act" || t == "join"
             || t == "meet";
    }

    std::size_t to_index(std::string const& tok, std::size_t line) {
      std::size_t value = 0;
      auto const* first = tok.data();
      auto const* last  = tok.data() + tok.size();
      auto [ptr, ec]    = std::from_chars(first, last, value);
      if (tok.empty() || ec != std::errc() || ptr != last) {
        throw ParseError(line, "expected a decimal index, got '" + tok + "'");
      }
      return value;
    }

    std::vector<Line> tokenize(std::istream& in) {
      std::vector<Line> out;
      std::string       text;
      std::size_t       number = 0;
      while (std::getline(in, text)) {
        ++number;
        if (auto hash = text.find('#'); hash != std::string::npos) {
          text.erase(hash);
        }
        std::istringstream       is(text);
        std::vector<std::string> tokens;
        for (std::string t; is >> t;) {
          tokens.push_back(t);
        }
        if (!tokens.empty()) {
          out.push_back({number, std::move(tokens)});
        }
      }
      return out;
    }

    // The lines of one block after its keyword line.
    struct Block {
      std::string             keyword;
      std::size_t             line;
      std::vector<Line const*> body;
    };

    std::vector<Block> split_blocks(std::vector<Line> const& lines) {
      std::vector<Block> blocks;
      for (auto const& l : lines) {
        if (l.tokens.size() == 1 && is_block_keyword(l.tokens[0])) {
          blocks.push_back({l.tokens[0], l.number, {}});
        } else if (blocks.empty()) {
          throw ParseError(l.number, "expected a block keyword (semiring, "
                                     "semimodule, lattice, map)");
        } else {
          blocks.back().body.push_back(&l);
        }
      }
      return blocks;
    }

    struct BlockData {
      std::map<std::string, std::size_t> keys;
      std::map<std::string, RawTable>    tables;
      std::vector<elem_t>                row;  // a bare index line (maps)
    };

    // rows_of(name) is the number of rows the table `name` has, which may
    // depend on keys read earlier.
    template <typename RowsOf>
    BlockData read_block(Block const& b, RowsOf&& rows_of) {
      BlockData   d;
      std::size_t i = 0;
      auto const& body = b.body;
      while (i < body.size()) {
        auto const& l = *body[i];
        auto const& t = l.tokens;
        if (t.size() == 1 && is_table_keyword(t[0])) {
          if (d.tables.count(t[0])) {
            throw ParseError(l.number, "duplicate table '" + t[0] + "'");
          }
          std::size_t const rows = rows_of(t[0], d, l.number);
          RawTable          table;
          for (std::size_t r = 0; r < rows; ++r) {
            if (++i >= body.size()) {
              throw ParseError(l.number, "table '" + t[0] + "' needs "
                                             + std::to_string(rows)
                                             + " rows");
            }
            auto const&         rl = *body[i];
            std::vector<elem_t> row;
            for (auto const& tok : rl.tokens) {
              row.push_back(to_index(tok, rl.number));
            }
            table.push_back(std::move(row));
          }
          d.tables[t[0]] = std::move(table);
          ++i;
        } else if (t.size() == 2 && !std::isdigit(static_cast<unsigned char>(t[0][0]))) {
          if (d.keys.count(t[0])) {
            throw ParseError(l.number, "duplicate key '" + t[0] + "'");
          }
          d.keys[t[0]] = to_index(t[1], l.number);
          ++i;
        } else if (std::isdigit(static_cast<unsigned char>(t[0][0])) || t[0] == "image") {
          if (!d.row.empty()) {
            throw ParseError(l.number, "more than one index line");
          }
          for (std::size_t k = t[0] == "image" ? 1 : 0; k < t.size(); ++k) {
            d.row.push_back(to_index(t[k], l.number));
          }
          ++i;
        } else {
          throw ParseError(l.number, "unexpected '" + t[0] + "'");
        }
      }
      return d;
    }

    std::size_t require(BlockData const&   d,
                        std::string const& key,
                        Block const&       b) {
      auto it = d.keys.find(key);
      if (it == d.keys.end()) {
        throw ParseError(b.line, b.keyword + " block needs '" + key + "'");
      }
      return it->second;
    }

    RawTable const& table(BlockData const&   d,
                          std::string const& name,
                          Block const&       b) {
      auto it = d.tables.find(name);
      if (it == d.tables.end()) {
        throw ParseError(b.line,
                         b.keyword + " block needs table '" + name + "'");
      }
      return it->second;
    }

    void only(BlockData const&                d,
              std::vector<std::string> const& keys,
              std::vector<std::string> const& tables,
              bool                            row,
              Block const&                    b) {
      for (auto const& [k, v] : d.keys) {
        if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
          throw ParseError(b.line, "unknown key '" + k + "' in " + b.keyword
                                       + " block");
        }
      }
      for (auto const& [k, v] : d.tables) {
        if (std::find(tables.begin(), tables.end(), k) == tables.end()) {
          throw ParseError(b.line, "unknown table '" + k + "' in "
                                       + b.keyword + " block");
        }
      }
      if (!row && !d.row.empty()) {
        throw ParseError(b.line, "stray index line in " + b.keyword + " block");
      }
    }

    std::size_t order_rows(BlockData const& d, std::size_t line) {
      auto it = d.keys.find("order");
      if (it == d.keys.end()) {
        throw ParseError(line, "'order' must precede the tables");
      }
      return it->second;
    }

    void write_table(std::ostream& os, OpTable const& t) {
      for (std::size_t r = 0; r < t.rows(); ++r) {
        for (std::size_t c = 0; c < t.cols(); ++c) {
          os << (c == 0 ? "" : " ") << t(r, c);
        }
        os << "\n";
      }
    }
  }  // namespace

  Document parse_document(std::istream& in) {
    Document   doc;
    auto const lines  = tokenize(in);
    auto const blocks = split_blocks(lines);
    for (auto const& b : blocks) {
      if (b.keyword == "semiring") {
        auto d = read_block(b, [](std::string const&, BlockData const& d,
                                  std::size_t line) {
          return order_rows(d, line);
        });
        only(d, {"order", "zero", "one"}, {"add", "mul"}, false, b);
        std::size_t const n = require(d, "order", b);
        auto const        z = require(d, "zero", b);
        auto const        o = require(d, "one", b);
        if (z >= n || o >= n) {
          throw ParseError(b.line, "zero and one must be below order");
        }
        doc.semirings.push_back(share(validate_semiring(
            table(d, "add", b), table(d, "mul", b), z, o)));
      } else if (b.keyword == "semimodule") {
        if (doc.semirings.empty()) {
          throw ParseError(b.line, "semimodule block needs a preceding "
                                   "semiring block");
        }
        auto const& S = doc.semirings.back();
        auto        d = read_block(b, [&](std::string const& name,
                                   BlockData const& d, std::size_t line) {
          return name == "act" ? S->order() : order_rows(d, line);
        });
        only(d, {"order", "zero"}, {"add", "act"}, false, b);
        std::size_t const n = require(d, "order", b);
        auto const        z = require(d, "zero", b);
        if (z >= n) {
          throw ParseError(b.line, "zero must be below order");
        }
        doc.semimodules.push_back(
            validate_semimodule(S, table(d, "add", b), table(d, "act", b), z));
      } else if (b.keyword == "lattice") {
        auto d = read_block(b, [](std::string const&, BlockData const& d,
                                  std::size_t line) {
          return order_rows(d, line);
        });
        only(d, {"order", "bottom", "top"}, {"join", "meet"}, false, b);
        LatticeSpec L;
        L.order  = require(d, "order", b);
        L.bottom = require(d, "bottom", b);
        L.top    = require(d, "top", b);
        L.join   = OpTable::from_raw(table(d, "join", b), L.order, L.order,
                                     L.order, "join");
        if (d.tables.count("meet")) {
          L.meet = OpTable::from_raw(d.tables.at("meet"), L.order, L.order,
                                     L.order, "meet");
        }
        validate_lattice(L);
        doc.lattices.push_back(std::move(L));
      } else {
        auto d = read_block(b, [&](std::string const& name, BlockData const&,
                                   std::size_t line) -> std::size_t {
          throw ParseError(line, "unexpected table '" + name + "' in map");
        });
        only(d, {"source", "target"}, {}, true, b);
        MapSpec m;
        m.line = b.line;
        if (d.keys.count("source")) {
          m.source = d.keys.at("source");
        }
        if (d.keys.count("target")) {
          m.target = d.keys.at("target");
        }
        m.image = d.row;
        if (m.image.empty()) {
          throw ParseError(b.line, "map block needs a line of image indices");
        }
        doc.maps.push_back(std::move(m));
      }
    }
    return doc;
  }

  Document parse_document(std::string const& text) {
    std::istringstream in(text);
    return parse_document(in);
  }

  Document parse_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw FileError("cannot open '" + path + "'");
    }
    return parse_document(in);
  }

  std::string format_semiring(SemiringTable const& S) {
    std::ostringstream os;
    os << "semiring\norder " << S.order() << "\nzero " << S.zero()
       << "\none " << S.one() << "\nadd\n";
    write_table(os, S.add_table());
    os << "mul\n";
    write_table(os, S.mul_table());
    return os.str();
  }

  std::string format_semimodule(SemimoduleTable const& M) {
    std::ostringstream os;
    os << "semimodule\norder " << M.order() << "\nzero " << M.zero()
       << "\nadd\n";
    write_table(os, M.add_table());
    os << "act\n";
    write_table(os, M.act_table());
    return os.str();
  }

  std::string format_lattice(LatticeSpec const& L) {
    std::ostringstream os;
    os << "lattice\norder " << L.order << "\nbottom " << L.bottom << "\ntop "
       << L.top << "\njoin\n";
    write_table(os, L.join);
    if (L.meet) {
      os << "meet\n";
      write_table(os, *L.meet);
    }
    return os.str();
  }

  std::string format_map(LinearMap const& f) {
    return "map\n" + f.to_string() + "\n";
  }

  std::string format_decomposition(Decomposition const& D) {
    std::ostringstream os;
    os << "decomposition\nparts " << D.parts.size() << "\n";
    for (std::size_t i = 0; i < D.parts.size(); ++i) {
      os << "part";
      D.parts[i].for_each([&](elem_t x) { os << " " << x; });
      os << "\nprojection " << D.idempotents[i].to_string() << "\n";
    }
    return os.str();
  }

}  // namespace semilab
