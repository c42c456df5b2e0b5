#include "freeloop/cells.hpp"

#include "freeloop/chain.hpp"

#include <algorithm>
#include <set>

namespace freeloop {

Cell top_cell(int m, int n) {
  Cell c;
  Block open;
  for (int i = 0; i <= m; ++i) open.elems.push_back(i);
  open.sort = 'F';
  c.blocks.push_back(std::move(open));
  if (n > 0) {
    Block cube;
    for (int i = 0; i <= n + 1; ++i) cube.elems.push_back(i);
    cube.sort = 'C';
    c.blocks.push_back(std::move(cube));
  }
  return c;
}

int dim_cell(const Cell& cell) {
  int s = 0;
  for (const auto& b : cell.blocks) s += static_cast<int>(b.elems.size()) - 1;
  return s - (static_cast<int>(cell.blocks.size()) - 1);
}

std::pair<int, int> intrinsic(const Cell& cell) {
  int mp = static_cast<int>(cell.blocks[0].elems.size()) - 1;
  int np = 0;
  for (size_t i = 1; i < cell.blocks.size(); ++i)
    np += static_cast<int>(cell.blocks[i].elems.size()) - 2;
  return {mp, np};
}

std::vector<std::pair<int, int>> interiors(const Cell& cell) {
  std::vector<std::pair<int, int>> out;
  for (size_t bi = 1; bi < cell.blocks.size(); ++bi) {
    int len = static_cast<int>(cell.blocks[bi].elems.size());
    for (int pos = 1; pos < len - 1; ++pos) out.push_back({static_cast<int>(bi), pos});
  }
  return out;
}

namespace {
std::vector<int> slice(const std::vector<int>& v, int a, int b) {  // v[a:b]
  a = std::max(a, 0);
  b = std::min<int>(b, static_cast<int>(v.size()));
  if (a >= b) return {};
  return {v.begin() + a, v.begin() + b};
}
}  // namespace

Cell face_cell(const Cell& cell, int eps, int i) {
  auto [mp, np] = intrinsic(cell);
  Cell out = cell;
  auto& blocks = out.blocks;
  const std::vector<int> opn = blocks[0].elems;
  if (eps == 1 && i == 1 && mp > 0) eps = 2;
  if (eps == 0) {
    if (1 <= i && i <= mp) {
      blocks[0].elems = slice(opn, 0, i);
      blocks.insert(blocks.begin() + 1, Block{slice(opn, i - 1, (int)opn.size()), 'F'});
    } else if (mp < i && i <= mp + np) {
      int j = i - mp;
      auto [bi, pos] = interiors(cell)[j - 1];
      Block b = blocks[bi];
      Block left{slice(b.elems, 0, pos + 1), b.sort};
      Block right{slice(b.elems, pos, (int)b.elems.size()), b.sort};
      blocks[bi] = left;
      blocks.insert(blocks.begin() + bi + 1, right);
    } else {
      fail("illegal face (0," + std::to_string(i) + ")");
    }
  } else if (eps == 1) {
    if (2 <= i && i <= mp) {
      std::vector<int> e = slice(opn, 0, i - 1);
      auto tail = slice(opn, i, (int)opn.size());
      e.insert(e.end(), tail.begin(), tail.end());
      blocks[0].elems = e;
    } else if (mp < i && i <= mp + np) {
      int j = i - mp;
      auto [bi, pos] = interiors(cell)[j - 1];
      std::vector<int>& e = blocks[bi].elems;
      e.erase(e.begin() + pos);
    } else if (i == 1 && mp == 0 && np >= 1) {
      return face_cell(cell, 1, mp + 1);
    } else {
      fail("illegal face (1," + std::to_string(i) + ")");
    }
  } else if (eps == 2) {
    expect(1 <= i && i <= mp, "illegal face (2," + std::to_string(i) + ")");
    blocks[0].elems = slice(opn, i, (int)opn.size());
    blocks.push_back(Block{slice(opn, 0, i + 1), 'F'});
  } else {
    fail("bad face kind");
  }
  return out;
}

std::vector<int> eta_tower(std::vector<int> tower, int i) {
  std::vector<int> out;
  size_t k = 0;
  while (k < tower.size() && i <= tower[k]) {
    out.push_back(tower[k] + 1);
    ++k;
  }
  out.push_back(i);
  out.insert(out.end(), tower.begin() + k, tower.end());
  return out;
}

Elem eta(const Elem& e, int i) {
  auto [mp, np] = intrinsic(e.cell);
  np += static_cast<int>(e.tower.size());
  expect(1 <= i && i <= np + 1, "illegal degeneracy index");
  return {e.cell, eta_tower(e.tower, i)};
}

Elem face(const Elem& e, int eps, int i) {
  auto [mp, npc] = intrinsic(e.cell);
  int np = npc + static_cast<int>(e.tower.size());
  if (eps == 1 && i == 1 && mp > 0) eps = 2;
  if (e.tower.empty()) return {face_cell(e.cell, eps, i), {}};
  int j = e.tower[0];
  Elem y{e.cell, {e.tower.begin() + 1, e.tower.end()}};
  if (eps == 2) {
    expect(1 <= i && i <= mp, "illegal face (2,i) on degenerate element");
    Elem f = face(y, 2, i);
    return {f.cell, eta_tower(f.tower, j)};
  }
  if (i <= mp) {
    if (eps == 0) {
      Elem f = face(y, 0, i);
      return {f.cell, eta_tower(f.tower, j + mp - i)};
    }
    expect(i >= 2, "illegal face (1,1) routing");
    Elem f = face(y, 1, i);
    return {f.cell, eta_tower(f.tower, j)};
  }
  int k = i - mp;
  expect(1 <= k && k <= np, "face index out of range on degenerate element");
  if (k < j) {
    Elem f = face(y, eps, i);
    return {f.cell, eta_tower(f.tower, j - 1)};
  }
  if (k == j) return y;
  Elem f = face(y, eps, i - 1);
  return {f.cell, eta_tower(f.tower, j)};
}

// ---------------- printing / parsing ----------------

std::string show_cell(const Cell& cell) { return show(Elem{cell, {}}); }

std::string show(const Elem& e) {
  const Cell& cell = e.cell;
  std::vector<int> stars(e.tower.rbegin(), e.tower.rend());  // ascending positions
  // combined slot q (1-based over stars + interior symbols) -> star?
  auto is_star = [&](int q) { return std::binary_search(stars.begin(), stars.end(), q); };

  std::ostringstream os;
  for (int v : cell.blocks[0].elems) {
    expect(v >= 0 && v <= 9, "symbol out of printable range");
    os << v;
  }
  os << ']';
  if (cell.blocks.size() == 1) {
    for (size_t i = 0; i < e.tower.size(); ++i) os << '*';
    return os.str();
  }

  int total = static_cast<int>(interiors(cell).size() + e.tower.size());
  int q = 1;  // next combined slot to place
  for (size_t bi = 1; bi < cell.blocks.size(); ++bi) {
    const Block& b = cell.blocks[bi];
    bool last = (bi + 1 == cell.blocks.size());
    os << '[';
    int len = static_cast<int>(b.elems.size());
    std::vector<std::string> items;
    auto sym = [&](int v) {
      if (b.sort == 'C') return "b" + std::to_string(v);
      expect(v >= 0 && v <= 9, "symbol out of printable range");
      return std::string(1, static_cast<char>('0' + v));
    };
    for (int pos = 0; pos < len; ++pos) {
      if (pos >= 1 && pos <= len - 2) {
        while (q <= total && is_star(q)) {
          items.push_back("*");
          ++q;
        }
        ++q;  // this interior occupies a slot
      } else if (pos == len - 1 && last) {
        while (q <= total && is_star(q)) {
          items.push_back("*");
          ++q;
        }
      }
      items.push_back(sym(b.elems[pos]));
    }
    os << join(items, b.sort == 'C' ? "," : "");
    os << ']';
  }
  return os.str();
}

Elem parse_elem(const std::string& s) {
  size_t p = 0;
  auto more = [&] { return p < s.size(); };
  Cell cell;
  Block open{{}, 'F'};
  while (more() && s[p] != ']') {
    expect(isdigit(s[p]), "bad open block in '" + s + "'");
    open.elems.push_back(s[p] - '0');
    ++p;
  }
  expect(more() && s[p] == ']', "missing ] in '" + s + "'");
  ++p;
  expect(!open.elems.empty(), "empty open block in '" + s + "'");
  cell.blocks.push_back(open);

  std::vector<int> star_slots;
  int q = 0;  // combined slot counter (stars + interiors)
  while (more() && s[p] == '[') {
    ++p;
    std::vector<std::string> items;
    std::string cur;
    bool is_cube = false;
    while (more() && s[p] != ']') {
      if (s[p] == ',') {
        is_cube = true;
        items.push_back(cur);
        cur.clear();
      } else if (s[p] == '*' && cur.empty() && !is_cube) {
        items.push_back("*");
      } else {
        cur += s[p];
      }
      ++p;
    }
    expect(more(), "missing ] in '" + s + "'");
    ++p;
    if (!cur.empty() || is_cube) items.push_back(cur);
    // split non-cube char runs into single symbols
    if (!is_cube) {
      std::vector<std::string> flat;
      for (const auto& it : items) {
        if (it == "*") {
          flat.push_back(it);
          continue;
        }
        for (char ch : it) flat.push_back(std::string(1, ch));
      }
      items = flat;
    }
    Block b{{}, is_cube ? 'C' : 'F'};
    std::vector<bool> star_at;  // per item
    for (const auto& it : items) {
      if (it == "*") {
        star_at.push_back(true);
        continue;
      }
      star_at.push_back(false);
      if (is_cube) {
        expect(it.size() >= 2 && it[0] == 'b', "bad cube symbol '" + it + "'");
        b.elems.push_back(std::stoi(it.substr(1)));
      } else {
        expect(it.size() == 1 && isdigit(it[0]), "bad symbol '" + it + "'");
        b.elems.push_back(it[0] - '0');
      }
    }
    expect(b.elems.size() >= 2, "closed block too short in '" + s + "'");
    // walk items, assigning combined slots to stars and interior symbols
    int sym_idx = -1;
    int last_sym = static_cast<int>(b.elems.size()) - 1;
    for (bool st : star_at) {
      if (st) {
        ++q;
        star_slots.push_back(q);
      } else {
        ++sym_idx;
        if (sym_idx >= 1 && sym_idx <= last_sym - 1) ++q;
      }
    }
    cell.blocks.push_back(std::move(b));
  }
  while (more() && s[p] == '*') {
    ++q;
    star_slots.push_back(q);
    ++p;
  }
  expect(!more(), "trailing characters in '" + s + "'");

  for (size_t i = 1; i < star_slots.size(); ++i)
    expect(star_slots[i - 1] < star_slots[i], "misplaced stars in '" + s + "'");
  std::vector<int> tower(star_slots.rbegin(), star_slots.rend());
  return {cell, tower};
}

// ---------------- chains ----------------

void add_term(ElemSum& acc, const Elem& e, const Int& c) {
  auto it = acc.find(e);
  if (it == acc.end()) {
    if (c != 0) acc.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) acc.erase(it);
}

ElemSum boundary(const Elem& e) {
  auto [mp, npc] = intrinsic(e.cell);
  int np = npc + static_cast<int>(e.tower.size());
  int r = mp + np;
  ElemSum acc;
  for (int i = 1; i <= r; ++i) {
    add_term(acc, face(e, 0, i), sign_pow(i));
    add_term(acc, face(e, 1, i), -sign_pow(i));
  }
  for (int i = 2; i <= mp; ++i) add_term(acc, face(e, 2, i), sign_pow((i - 1) * r));
  return acc;
}

ElemSum boundary_chain(const ElemSum& ch) {
  ElemSum acc;
  for (const auto& [e, c] : ch)
    for (const auto& [f, c2] : boundary(e)) add_term(acc, f, c * c2);
  return acc;
}

ElemSum normalized(const ElemSum& ch) {
  ElemSum out;
  for (const auto& [e, c] : ch)
    if (e.tower.empty()) out.emplace(e, c);
  return out;
}

Elem apply_word(Elem e, const Word& w) {
  for (const auto& [eps, i] : w) e = face(e, eps, i);
  return e;
}

std::vector<Cell> enumerate_cells(int m, int n) {
  std::set<Cell> seen;
  std::vector<Cell> frontier{top_cell(m, n)};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Cell> next;
    for (const Cell& c : frontier) {
      auto [mp, np] = intrinsic(c);
      std::vector<std::pair<int, int>> legal;
      for (int i = 1; i <= mp + np; ++i) legal.push_back({0, i});
      for (int i = 2; i <= mp + np; ++i) legal.push_back({1, i});
      if (mp > 0 || np >= 1) legal.push_back({1, 1});
      for (int i = 1; i <= mp; ++i) legal.push_back({2, i});
      for (auto [eps, i] : legal) {
        Cell f = face_cell(c, eps, i);
        if (seen.insert(f).second) next.push_back(f);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<long> f_vector(int m, int n) {
  std::vector<long> fv(m + n + 1, 0);
  for (const Cell& c : enumerate_cells(m, n)) fv[dim_cell(c)]++;
  return fv;
}

ChainComplex cell_complex(int m, int n, const Ring& ring) {
  auto cells = enumerate_cells(m, n);
  ChainComplex C;
  C.ring = ring;
  std::map<int, std::vector<std::pair<std::string, Cell>>> by_dim;
  for (const Cell& c : cells) by_dim[dim_cell(c)].push_back({show_cell(c), c});
  std::map<std::string, std::pair<int, int>> index;  // label -> (degree, idx)
  for (auto& [k, v] : by_dim) {
    std::sort(v.begin(), v.end());
    std::vector<std::string> ls;
    for (size_t i = 0; i < v.size(); ++i) {
      ls.push_back(v[i].first);
      index[v[i].first] = {k, static_cast<int>(i)};
    }
    C.basis[k] = std::move(ls);
  }
  for (auto& [k, v] : by_dim) {
    if (k == 0) continue;
    SparseMat mdiff(C.dim(k - 1), C.dim(k));
    for (size_t ci = 0; ci < v.size(); ++ci) {
      ElemSum b = normalized(boundary(Elem{v[ci].second, {}}));
      for (const auto& [f, c] : b) {
        auto [dk, row] = index.at(show_cell(f.cell));
        expect(dk == k - 1, "boundary degree mismatch");
        mdiff.add(row, static_cast<int>(ci), c, ring);
      }
    }
    C.set_diff(k, std::move(mdiff));
  }
  return C;
}

}  // namespace freeloop
