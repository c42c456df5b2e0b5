#pragma once

#include "freeloop/base.hpp"

#include <utility>

namespace freeloop {

// A cell is a list of blocks of symbols. blocks[0] is the open block; the
// closed blocks follow in display order. Consecutive chained blocks share
// exactly their endpoint symbol. 'F' blocks hold simplex vertices, 'C'
// blocks hold cube coordinates.
struct Block {
  std::vector<int> elems;
  char sort = 'F';

  bool operator==(const Block& o) const { return sort == o.sort && elems == o.elems; }
  bool operator<(const Block& o) const {
    if (sort != o.sort) return sort < o.sort;
    return elems < o.elems;
  }
};

struct Cell {
  std::vector<Block> blocks;

  bool operator==(const Cell& o) const { return blocks == o.blocks; }
  bool operator<(const Cell& o) const { return blocks < o.blocks; }
};

// A cell together with a stack of degeneracy indices, outermost first,
// strictly decreasing (the normal form under eta_i eta_j = eta_{j+1} eta_i).
struct Elem {
  Cell cell;
  std::vector<int> tower;

  bool operator==(const Elem& o) const { return cell == o.cell && tower == o.tower; }
  bool operator<(const Elem& o) const {
    if (!(cell == o.cell)) return cell < o.cell;
    return tower < o.tower;
  }
};

Cell top_cell(int m, int n);
int dim_cell(const Cell& cell);
std::pair<int, int> intrinsic(const Cell& cell);
std::vector<std::pair<int, int>> interiors(const Cell& cell);

Cell face_cell(const Cell& cell, int eps, int i);
std::vector<int> eta_tower(std::vector<int> tower, int i);
Elem eta(const Elem& e, int i);
Elem face(const Elem& e, int eps, int i);

inline int elem_dim(const Elem& e) { return dim_cell(e.cell) + static_cast<int>(e.tower.size()); }

std::string show_cell(const Cell& cell);
std::string show(const Elem& e);
Elem parse_elem(const std::string& s);
inline Cell parse_cell(const std::string& s) {
  Elem e = parse_elem(s);
  expect(e.tower.empty(), "expected a nondegenerate cell: " + s);
  return e.cell;
}

using ElemSum = std::map<Elem, Int>;

void add_term(ElemSum& acc, const Elem& e, const Int& c);
ElemSum boundary(const Elem& e);
ElemSum boundary_chain(const ElemSum& ch);
ElemSum normalized(const ElemSum& ch);

using Word = std::vector<std::pair<int, int>>;  // (eps, i), applied left to right
Elem apply_word(Elem e, const Word& w);

std::vector<Cell> enumerate_cells(int m, int n);
std::vector<long> f_vector(int m, int n);

struct ChainComplex;
// Cellular chain complex with basis labels show_cell(c), sorted within degree.
ChainComplex cell_complex(int m, int n, const Ring& ring = {});

}  // namespace freeloop
