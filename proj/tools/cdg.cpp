#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cdg/chardeg.hpp"
#include "cdg/errors.hpp"
#include "cdg/report.hpp"
#include "cdg/tower.hpp"

namespace {

using cdg::Tower;
using cdg::TowerLevel;
using nlohmann::json;

json read_report(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw cdg::Error("cannot read '" + path + "'");
  return json::parse(f);
}

// Recomputes every level from the construction parameters recorded in the
// report (explicit steps re-spin their module with the stored seed policy)
// and requires the stored levels to match field by field.
Tower rebuild(const Tower& t, cdg::u64 cap) {
  Tower out;
  const cdg::StructuralGroup& base = t.front().group;
  switch (base.kind) {
    case cdg::GroupKind::SevenCube:
      out.push_back(cdg::build_base_seven_cube(cap));
      break;
    case cdg::GroupKind::ThreePrime:
      out.push_back(cdg::build_base_three_prime(base.p1, base.p2, base.r));
      break;
    case cdg::GroupKind::Cyclic:
      out.push_back(cdg::fixture_cyclic(base.cyclic_m));
      break;
    case cdg::GroupKind::Extraspecial:
      out.push_back(cdg::fixture_extraspecial(cdg::u32(base.es_p),
                                              cdg::u32(base.es_n)));
      break;
    case cdg::GroupKind::Step:
      throw cdg::DescriptorError("level 0 must be a base or a fixture");
  }
  for (std::size_t i = 1; i < t.size(); ++i) {
    const cdg::StructuralGroup& g = t[i].group;
    if (g.kind != cdg::GroupKind::Step) {
      throw cdg::DescriptorError("levels after the base must be steps");
    }
    cdg::StepMode mode =
        g.module ? cdg::StepMode::Explicit : cdg::StepMode::Symbolic;
    out.push_back(cdg::build_step(out.back(), g.p, g.r, mode, cap));
  }
  return out;
}

void check_certificates(const Tower& t, cdg::u64 cap) {
  Tower fresh = rebuild(t, cap);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (cdg::level_to_json(fresh[i]) != cdg::level_to_json(t[i])) {
      throw cdg::CertificationError(
          "level " + std::to_string(i) +
          ": stored level differs from its recomputation");
    }
    if (i > 0) {
      if (!t[i].group.inner ||
          cdg::structural_to_json(*t[i].group.inner) !=
              cdg::structural_to_json(t[i - 1].group)) {
        throw cdg::CertificationError("level " + std::to_string(i) +
                                      ": inner descriptor does not match level " +
                                      std::to_string(i - 1));
      }
    }
  }
}

int run_build(const std::string& base, cdg::u64 p1, cdg::u64 p2, cdg::u64 r,
              cdg::u64 m, cdg::u64 ep, cdg::u64 en, unsigned steps,
              const std::string& strategy, const std::string& mode,
              cdg::u64 cap, const std::string& out_path) {
  TowerLevel level;
  if (base == "seven-cube") {
    level = cdg::build_base_seven_cube(cap);
  } else if (base == "three-prime") {
    level = cdg::build_base_three_prime(p1, p2, r);
  } else if (base == "cyclic") {
    level = cdg::fixture_cyclic(m);
  } else if (base == "extraspecial") {
    level = cdg::fixture_extraspecial(cdg::u32(ep), cdg::u32(en));
  } else {
    throw cdg::DescriptorError("unknown base '" + base + "'");
  }
  Tower t = steps ? cdg::build_tower(level, steps, cdg::strategy_from_name(strategy),
                                     cdg::mode_from_name(mode), cap)
                  : Tower{std::move(level)};

  std::ofstream f(out_path);
  if (!f) throw cdg::Error("cannot write '" + out_path + "'");
  f << cdg::tower_report(t).dump(2) << "\n";

  for (std::size_t i = 0; i < t.size(); ++i) {
    const cdg::Certificate& c = t[i].cert;
    std::cout << "level " << i << ": order " << c.order.str() << ", height "
              << c.fitting_height << ", min normal " << c.min_normal_order
              << ", cdg " << (c.cdg ? "yes" : "no")
              << (t[i].group.module ? " (explicit module)" : "") << "\n";
  }
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

int run_verify(const std::string& in_path, const std::string& tier, cdg::u64 cap) {
  Tower t = cdg::tower_from_report(read_report(in_path));
  if (tier == "certificate") {
    check_certificates(t, cap);
    std::cout << t.size() << " level(s) consistent with recomputation\n";
    return 0;
  }
  if (tier == "brute") {
    for (std::size_t i = 0; i < t.size(); ++i) {
      cdg::cross_validate(t[i], cap);
      std::cout << "level " << i << ": cross-validated by enumeration\n";
    }
    return 0;
  }
  if (tier == "cross") {
    check_certificates(t, cap);
    std::size_t done = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i].group.kind == cdg::GroupKind::Step && !t[i].group.module) {
        std::cout << "level " << i << ": symbolic step, certificate only\n";
        continue;
      }
      try {
        cdg::cross_validate(t[i], cap);
        std::cout << "level " << i << ": cross-validated by enumeration\n";
        ++done;
      } catch (const cdg::CapError&) {
        std::cout << "level " << i << ": over the enumeration cap, certificate only\n";
      }
    }
    std::cout << done << " of " << t.size() << " level(s) cross-validated\n";
    return 0;
  }
  throw cdg::DescriptorError("unknown tier '" + tier + "'");
}

int run_degrees(const std::string& in_path, unsigned level, cdg::u64 cap) {
  Tower t = cdg::tower_from_report(read_report(in_path));
  if (level >= t.size()) {
    throw cdg::DescriptorError("report has no level " + std::to_string(level));
  }
  cdg::ConcreteGroup g = cdg::build_concrete(t[level].group, cap);
  cdg::DegreeMultiset dm = cdg::char_degrees(g);
  std::cout << cdg::degrees_to_json(g.order(), dm).dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"composite-degree group towers: build, verify, enumerate"};
  app.require_subcommand(1);

  std::string base = "seven-cube", out_path, strategy = "fresh-primes",
              mode = "auto", in_path, tier = "cross";
  cdg::u64 p1 = 7, p2 = 13, r = 3, m = 1, ep = 3, en = 1, cap = 0;
  unsigned steps = 0, level = 0;

  CLI::App* build = app.add_subcommand("build", "construct a tower, write its report");
  build->add_option("--base", base, "seven-cube | three-prime | cyclic | extraspecial")
      ->capture_default_str();
  build->add_option("--p1", p1, "three-prime: |H|")->capture_default_str();
  build->add_option("--p2", p2, "three-prime: field characteristic")->capture_default_str();
  build->add_option("--r", r, "three-prime: scaling order")->capture_default_str();
  build->add_option("--m", m, "cyclic fixture order")->capture_default_str();
  build->add_option("--p", ep, "extraspecial fixture prime")->capture_default_str();
  build->add_option("--n", en, "extraspecial fixture rank")->capture_default_str();
  build->add_option("--steps", steps, "tower steps on top of the base")
      ->capture_default_str();
  build->add_option("--strategy", strategy, "fresh-primes | three-primes")
      ->capture_default_str();
  build->add_option("--mode", mode, "auto | explicit | symbolic")
      ->capture_default_str();
  build->add_option("--cap", cap, "enumeration cap (0 = CDG_CAP or 5e6)")
      ->capture_default_str();
  build->add_option("--out", out_path, "report file")->required();

  CLI::App* verify = app.add_subcommand("verify", "check a report");
  verify->add_option("--in", in_path, "report file")->required();
  verify->add_option("--tier", tier, "certificate | brute | cross")
      ->capture_default_str();
  verify->add_option("--cap", cap, "enumeration cap (0 = CDG_CAP or 5e6)")
      ->capture_default_str();

  CLI::App* degrees = app.add_subcommand("degrees", "character degrees of one level");
  degrees->add_option("--in", in_path, "report file")->required();
  degrees->add_option("--level", level, "level index")->capture_default_str();
  degrees->add_option("--cap", cap, "enumeration cap (0 = CDG_CAP or 5e6)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) {
      return run_build(base, p1, p2, r, m, ep, en, steps, strategy, mode, cap,
                       out_path);
    }
    if (verify->parsed()) return run_verify(in_path, tier, cap);
    if (degrees->parsed()) return run_degrees(in_path, level, cap);
    return 2;
  } catch (const cdg::CapError& e) {
    std::cerr << "over cap: " << e.what() << "\n";
    return 3;
  } catch (const cdg::CertificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
