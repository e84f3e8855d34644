#include "qbfredux/generators.hpp"

#include <random>

namespace qbfredux {

namespace {

Lit pos(Var v) { return Lit(v, true); }
Lit neg(Var v) { return Lit(v, false); }

}  // namespace

Formula gen_phi_c(std::uint32_t n) {
  if (n == 0) throw Error("family size must be at least 1");
  const auto x = [](std::uint32_t j) { return j; };
  const auto u = [n](std::uint32_t j) { return 4 * n + j; };

  std::vector<QuantifierBlock> blocks(5);
  blocks[0].quant = Quant::Exists;
  blocks[1].quant = Quant::Forall;
  blocks[2].quant = Quant::Exists;
  blocks[3].quant = Quant::Forall;
  blocks[4].quant = Quant::Exists;
  for (std::uint32_t i = 0; i < n; ++i) {
    blocks[0].vars.push_back(x(4 * i + 1));
    blocks[0].vars.push_back(x(4 * i + 2));
    blocks[1].vars.push_back(u(2 * i + 1));
    blocks[2].vars.push_back(x(4 * i + 3));
    blocks[3].vars.push_back(u(2 * i + 2));
    blocks[4].vars.push_back(x(4 * i + 4));
  }

  Formula f{Prefix(std::move(blocks))};
  for (std::uint32_t i = 0; i < n; ++i) {
    const Var x1 = x(4 * i + 1), x2 = x(4 * i + 2), x3 = x(4 * i + 3),
              x4 = x(4 * i + 4);
    const Var u1 = u(2 * i + 1), u2 = u(2 * i + 2);
    f.add_clause({pos(x1), pos(u1), neg(x3)});
    f.add_clause({pos(x2), neg(u1), pos(x3)});
    f.add_clause({neg(x1), neg(u1), neg(x3)});
    f.add_clause({neg(x2), pos(u1), pos(x3)});
    f.add_clause({pos(u1), neg(x3), pos(x4)});
    f.add_clause({neg(u2), neg(x4)});
    f.add_clause({neg(x1), pos(u2), neg(x4)});
  }
  return f;
}

Formula gen_phi_l(std::uint32_t n) {
  if (n == 0) throw Error("family size must be at least 1");
  const auto x = [](std::uint32_t j) { return j; };
  const auto u = [n](std::uint32_t j) { return 3 * n + j; };

  std::vector<QuantifierBlock> blocks(4);
  blocks[0].quant = Quant::Forall;
  blocks[1].quant = Quant::Exists;
  blocks[2].quant = Quant::Forall;
  blocks[3].quant = Quant::Exists;
  for (std::uint32_t i = 0; i < n; ++i) {
    blocks[0].vars.push_back(u(3 * i + 1));
    blocks[0].vars.push_back(u(3 * i + 2));
    blocks[1].vars.push_back(x(3 * i + 1));
    blocks[1].vars.push_back(x(3 * i + 2));
    blocks[2].vars.push_back(u(3 * i + 3));
    blocks[3].vars.push_back(x(3 * i + 3));
  }

  Formula f{Prefix(std::move(blocks))};
  for (std::uint32_t i = 0; i < n; ++i) {
    const Var x1 = x(3 * i + 1), x2 = x(3 * i + 2), x3 = x(3 * i + 3);
    const Var u1 = u(3 * i + 1), u2 = u(3 * i + 2), u3 = u(3 * i + 3);
    f.add_clause({neg(u2), neg(x1), neg(x2)});
    f.add_clause({neg(u1), neg(x1), pos(x2)});
    f.add_clause({pos(u1), pos(x1), neg(x2)});
    f.add_clause({pos(u2), pos(x1), pos(x2)});
    f.add_clause({neg(x1), neg(x2), pos(x3)});
    f.add_clause({pos(u3), neg(x3)});
    f.add_clause({neg(x1), pos(x2), neg(x3)});
    f.add_clause({neg(u3), pos(x3)});
  }
  return f;
}

namespace {

// Shared layout of the two parity families. The doubled variant carries
// the pair (z1, z2); the single variant just z1's slot.
Formula gen_parity(std::uint32_t n, bool doubled) {
  if (n < 2) throw Error("parity family needs n >= 2");
  const Var z1 = n + 1;
  const Var z2 = n + 2;
  const auto t = [n](std::uint32_t j) { return n + 1 + j; };

  std::vector<QuantifierBlock> blocks(3);
  blocks[0].quant = Quant::Exists;
  for (Var v = 1; v <= n; ++v) blocks[0].vars.push_back(v);
  blocks[1].quant = Quant::Forall;
  blocks[1].vars.push_back(z1);
  if (doubled) blocks[1].vars.push_back(z2);
  blocks[2].quant = Quant::Exists;
  for (std::uint32_t j = 2; j <= n; ++j) blocks[2].vars.push_back(t(j));

  Formula f{Prefix(std::move(blocks))};
  const auto with_z = [&](Clause c, bool positive) {
    c.push_back(Lit(z1, positive));
    if (doubled) c.push_back(Lit(z2, positive));
    return c;
  };
  f.add_clause(with_z({pos(t(n))}, true));
  f.add_clause(with_z({neg(t(n))}, false));
  for (std::uint32_t i = 2; i <= n; ++i) {
    const Var a = i == 2 ? Var{1} : t(i - 1);
    const Var b = i;
    for (const bool z_positive : {true, false}) {
      f.add_clause(with_z({neg(a), neg(b), neg(t(i))}, z_positive));
      f.add_clause(with_z({pos(a), pos(b), neg(t(i))}, z_positive));
      f.add_clause(with_z({neg(a), pos(b), pos(t(i))}, z_positive));
      f.add_clause(with_z({pos(a), neg(b), pos(t(i))}, z_positive));
    }
  }
  return f;
}

}  // namespace

Formula gen_quparity(std::uint32_t n) { return gen_parity(n, true); }

Formula gen_lqparity(std::uint32_t n) { return gen_parity(n, false); }

Formula gen_random_qbf(const RandomQbfConfig& cfg) {
  if (cfg.num_vars == 0 || cfg.num_clauses == 0 || cfg.num_blocks == 0)
    throw Error("random formula needs positive variable, clause, and block counts");
  if (cfg.num_blocks > cfg.num_vars)
    throw Error("more blocks than variables");
  if (cfg.width_min == 0 || cfg.width_min > cfg.width_max)
    throw Error("invalid clause width range");
  if (cfg.width_max > cfg.num_vars)
    throw Error("clause width exceeds variable count");

  std::vector<QuantifierBlock> blocks(cfg.num_blocks);
  for (std::uint32_t level = 0; level < cfg.num_blocks; ++level) {
    // Innermost block existential, alternating outwards.
    const bool exists = (cfg.num_blocks - 1 - level) % 2 == 0;
    blocks[level].quant = exists ? Quant::Exists : Quant::Forall;
  }
  for (Var v = 1; v <= cfg.num_vars; ++v)
    blocks[(v - 1) % cfg.num_blocks].vars.push_back(v);

  Formula f{Prefix(std::move(blocks))};
  // Plain modulo sampling keeps the stream identical across platforms.
  std::mt19937_64 rng(cfg.seed);
  for (std::uint32_t c = 0; c < cfg.num_clauses; ++c) {
    const std::uint32_t width =
        cfg.width_min + static_cast<std::uint32_t>(
                            rng() % (cfg.width_max - cfg.width_min + 1));
    Clause clause;
    std::vector<bool> used(cfg.num_vars + 1, false);
    while (clause.size() < width) {
      const Var v = 1 + static_cast<Var>(rng() % cfg.num_vars);
      if (used[v]) continue;
      used[v] = true;
      clause.push_back(Lit(v, (rng() & 1) != 0));
    }
    f.add_clause(std::move(clause));
  }
  return f;
}

}  // namespace qbfredux
