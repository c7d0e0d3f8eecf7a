// Command-line front end: Fox function tables, commutation predicates, group
// arithmetic over space-model files, and the built-in verification suite.

#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "foxcohen/foxcohen.hpp"

namespace {

using namespace foxcohen;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInputFile = 3;

constexpr const char* kConventionNote =
    "# convention: phi(0,k) = -1 and phi(k,k) = (-1)^(k-1), the values taken by the "
    "subset-sum definition; the fiat boundary alternative (phi(0,k) = 1, phi(k,k) = (-1)^k) "
    "negates the whole table and is not used";

SpaceModel resolve_space(const std::string& source) {
  constexpr const char* prefix = "catalog:";
  if (source.rfind(prefix, 0) == 0) return catalog_model(source.substr(std::strlen(prefix)));
  std::ifstream in(source);
  if (!in) throw std::ios_base::failure("cannot open space file '" + source + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return load_space(buf.str());
  } catch (const ParseError& e) {
    throw std::ios_base::failure(std::string(e.what()) + " (in '" + source + "')");
  } catch (const SchemaError& e) {
    throw std::ios_base::failure(std::string(e.what()) + " (in '" + source + "')");
  } catch (const ValidationError& e) {
    throw std::ios_base::failure(std::string(e.what()) + " (in '" + source + "')");
  }
}

int cmd_phi(int l, int k, const std::string& method, int budget) {
  std::cout << kConventionNote << "\n";
  auto line = [&](const char* label, const Int& v) {
    std::cout << "phi(" << l << "," << k << ") " << label << " = " << v << "\n";
  };
  if (method == "bruteforce") {
    line("bruteforce", phi_bruteforce(l, k, budget));
  } else if (method == "recurrence") {
    line("recurrence", phi_recurrence(l, k));
  } else if (method == "closed") {
    line("closed", phi_closed(l, k));
  } else {
    const Int b = phi_bruteforce(l, k, budget);
    const Int r = phi_recurrence(l, k);
    const Int c = phi_closed(l, k);
    line("bruteforce", b);
    line("recurrence", r);
    line("closed", c);
    const bool agree = (b == r && r == c);
    std::cout << "agreement: " << (agree ? "AGREE" : "DISAGREE") << "\n";
    if (!agree) return kExitCheckFailure;
  }
  return kExitOk;
}

int cmd_phi_table(int max_k, const std::string& format) {
  FoxTable table(max_k);
  if (format == "csv") {
    std::cout << kConventionNote << "\n";
    std::cout << "l,k,phi\n";
    for (int k = 1; k <= max_k; ++k)
      for (int l = 1; l <= k; ++l) std::cout << l << "," << k << "," << table.phi(l, k) << "\n";
  } else {
    std::cout << kConventionNote << "\n";
    std::cout << "| l | k | phi(l,k) |\n|---|---|----------|\n";
    for (int k = 1; k <= max_k; ++k)
      for (int l = 1; l <= k; ++l)
        std::cout << "| " << l << " | " << k << " | " << table.phi(l, k) << " |\n";
  }
  return kExitOk;
}

int cmd_delta(long long n, long long m) {
  std::cout << "delta(" << n << "," << m << ") = " << delta(n, m).value << "\n";
  return kExitOk;
}

int cmd_commutes(long long n, long long m, const std::string& order_text) {
  BracketOrder ord = BracketOrder::infinite();
  if (order_text != "inf" && order_text != "infinite") {
    try {
      ord = BracketOrder::finite(Int(order_text));
    } catch (const std::exception&) {
      throw DomainError("commutes: order must be a positive integer or 'inf'");
    }
  }
  const bool res = commutes_by_degree(n, m, ord);
  std::cout << "commutes(" << n << "," << m << "; order "
            << (ord.is_infinite() ? std::string("inf") : ord.value().str()) << ") = "
            << (res ? "true" : "false") << "\n";
  return kExitOk;
}

int cmd_stems(long long from, long long to, const std::string& format) {
  if (from < 1 || to < from) throw DomainError("stems: need 1 <= from <= to");
  auto cell = [](const StemReport& r) {
    return r.j4np1_abelian ? std::string(*r.j4np1_abelian ? "true" : "false") : std::string("n/a");
  };
  if (format == "csv") {
    std::cout << "n,delta_low,delta_high,j4nm1_abelian,j4np1_abelian\n";
    for (long long n = from; n <= to; ++n) {
      const StemReport r = stem_report(n);
      std::cout << n << "," << r.delta_low << "," << r.delta_high << ","
                << (r.j4nm1_abelian ? "true" : "false") << "," << cell(r) << "\n";
    }
  } else {
    std::cout << "| n | delta_low | delta_high | j4nm1_abelian | j4np1_abelian |\n"
              << "|---|-----------|------------|---------------|---------------|\n";
    for (long long n = from; n <= to; ++n) {
      const StemReport r = stem_report(n);
      std::cout << "| " << n << " | " << r.delta_low << " | " << r.delta_high << " | "
                << (r.j4nm1_abelian ? "true" : "false") << " | " << cell(r) << " |\n";
    }
  }
  return kExitOk;
}

struct GroupArgs {
  std::string space;
  int level = 1;
  std::vector<std::string> elements;
  long long exponent = 1;
  long long bound = 512;
  long long size_bound = 4096;
};

int cmd_group(const std::string& sub, const GroupArgs& args) {
  const SpaceModel model = resolve_space(args.space);
  auto need = [&](std::size_t n) {
    if (args.elements.size() != n)
      throw DomainError("group " + sub + ": expected " + std::to_string(n) +
                        " element literal(s)");
  };
  auto parse = [&](std::size_t i) { return parse_cohen_literal(model, args.level, args.elements[i]); };

  if (sub == "mul") {
    need(2);
    std::cout << format_cohen_literal(model, multiply(model, parse(0), parse(1))) << "\n";
  } else if (sub == "inv") {
    need(1);
    std::cout << format_cohen_literal(model, inverse(model, parse(0))) << "\n";
  } else if (sub == "comm") {
    need(2);
    std::cout << format_cohen_literal(model, commutator(model, parse(0), parse(1))) << "\n";
  } else if (sub == "pow") {
    need(1);
    std::cout << format_cohen_literal(model, power(model, parse(0), args.exponent)) << "\n";
  } else if (sub == "order") {
    need(1);
    const ElementOrder o = order(model, parse(0), args.bound);
    switch (o.kind) {
      case ElementOrder::Kind::Finite: std::cout << o.value << "\n"; break;
      case ElementOrder::Kind::Infinite: std::cout << "infinite\n"; break;
      case ElementOrder::Kind::ExceedsBound:
        std::cout << "exceeds-bound(" << args.bound << ")\n";
        break;
    }
  } else if (sub == "is-abelian") {
    need(0);
    const AbelianReport rep = is_abelian(model, args.level);
    std::cout << (rep.abelian ? "true" : "false") << "\n";
    if (rep.witness)
      std::cout << "witness: (degree " << rep.witness->first.degree << ", gen "
                << rep.witness->first.index << ") x (degree " << rep.witness->second.degree
                << ", gen " << rep.witness->second.index << ")\n";
  } else if (sub == "enumerate") {
    need(0);
    const GroupEnumeration e = enumerate_group(model, args.level, Int(args.size_bound));
    std::cout << "elements: " << e.elements.size() << "\n";
    std::cout << "order census:";
    for (const auto& [ord, count] : e.order_census) std::cout << " " << ord << ":" << count;
    std::cout << "\nexponent: " << e.exponent << "\n";
  } else {
    throw DomainError("group: unknown subcommand '" + sub + "'");
  }
  return kExitOk;
}

struct TauArgs {
  std::string space;
  int level = 1;
  int tau_index = 2;
  std::vector<std::string> elements;
};

int cmd_tau(const std::string& sub, const TauArgs& args) {
  const SpaceModel model = resolve_space(args.space);
  auto need = [&](std::size_t n) {
    if (args.elements.size() != n)
      throw DomainError("tau " + sub + ": expected " + std::to_string(n) + " element literal(s)");
  };
  if (sub == "mul") {
    need(2);
    std::cout << format_tau_literal(tau_multiply(model,
                                                 parse_tau_literal(model, args.level, args.elements[0]),
                                                 parse_tau_literal(model, args.level, args.elements[1])))
              << "\n";
  } else if (sub == "comm") {
    need(2);
    std::cout << format_tau_literal(tau_commutator(model,
                                                   parse_tau_literal(model, args.level, args.elements[0]),
                                                   parse_tau_literal(model, args.level, args.elements[1])))
              << "\n";
  } else if (sub == "multiplicities") {
    need(0);
    const auto full = tau_multiplicities(args.tau_index);
    const auto kernel = tau_kernel_multiplicities(args.tau_index);
    std::cout << "degree,multiplicity,kernel_multiplicity,modeled_rank\n";
    for (int d = 2; d <= args.tau_index; ++d) {
      const Int mult = full.count(d) ? full.at(d) : Int(0);
      const Int ker = kernel.count(d) ? kernel.at(d) : Int(0);
      std::cout << d << "," << mult << "," << ker << "," << model.group(d).rank() << "\n";
    }
  } else {
    throw DomainError("tau: unknown subcommand '" + sub + "'");
  }
  return kExitOk;
}

int cmd_verify(const std::string& only) {
  const auto results = run_acceptance(only);
  if (results.empty()) throw DomainError("verify: no checks match module '" + only + "'");
  int failed = 0;
  for (const auto& r : results) {
    std::cout << (r.pass ? "[PASS]" : "[FAIL]") << " C" << r.id << " " << r.module << ": "
              << r.name;
    if (!r.pass) {
      std::cout << " :: " << r.detail;
      ++failed;
    }
    std::cout << "\n";
  }
  std::cout << "result: " << (results.size() - static_cast<std::size_t>(failed)) << "/"
            << results.size() << " passed\n";
  return failed == 0 ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculus for twisted products of graded homotopy data"};
  app.require_subcommand(1);
  std::function<int()> run;

  // phi
  {
    auto* cmd = app.add_subcommand("phi", "evaluate the Fox function");
    auto l = std::make_shared<int>(0);
    auto k = std::make_shared<int>(1);
    auto method = std::make_shared<std::string>("all");
    auto budget = std::make_shared<int>(kPhiBruteforceBudget);
    cmd->add_option("--l", *l, "first argument")->required();
    cmd->add_option("--k", *k, "second argument")->required();
    cmd->add_option("--method", *method, "bruteforce|recurrence|closed|all")
        ->check(CLI::IsMember({"bruteforce", "recurrence", "closed", "all"}));
    cmd->add_option("--budget", *budget, "bruteforce enumeration budget for k");
    cmd->callback([=, &run] { run = [=] { return cmd_phi(*l, *k, *method, *budget); }; });
  }
  // phi-table
  {
    auto* cmd = app.add_subcommand("phi-table", "triangular table of Fox function values");
    auto max_k = std::make_shared<int>(8);
    auto format = std::make_shared<std::string>("csv");
    cmd->add_option("--max-k", *max_k, "largest second argument")->required();
    cmd->add_option("--format", *format, "csv|md")->check(CLI::IsMember({"csv", "md"}));
    cmd->callback([=, &run] { run = [=] { return cmd_phi_table(*max_k, *format); }; });
  }
  // delta
  {
    auto* cmd = app.add_subcommand("delta", "commutation obstruction for a degree pair");
    auto n = std::make_shared<long long>(1);
    auto m = std::make_shared<long long>(1);
    cmd->add_option("n", *n, "first degree index")->required();
    cmd->add_option("m", *m, "second degree index")->required();
    cmd->callback([=, &run] { run = [=] { return cmd_delta(*n, *m); }; });
  }
  // commutes
  {
    auto* cmd = app.add_subcommand("commutes", "whether two homogeneous classes commute");
    auto n = std::make_shared<long long>(1);
    auto m = std::make_shared<long long>(1);
    auto ord = std::make_shared<std::string>("inf");
    cmd->add_option("n", *n, "first degree index")->required();
    cmd->add_option("m", *m, "second degree index")->required();
    cmd->add_option("order", *ord, "bracket order: positive integer or 'inf'")->required();
    cmd->callback([=, &run] { run = [=] { return cmd_commutes(*n, *m, *ord); }; });
  }
  // stems
  {
    auto* cmd = app.add_subcommand("stems", "stem predicates and obstruction sizes over a range");
    auto from = std::make_shared<long long>(1);
    auto to = std::make_shared<long long>(10);
    auto format = std::make_shared<std::string>("csv");
    cmd->add_option("--from", *from, "first n")->required();
    cmd->add_option("--to", *to, "last n")->required();
    cmd->add_option("--format", *format, "csv|md")->check(CLI::IsMember({"csv", "md"}));
    cmd->callback([=, &run] { run = [=] { return cmd_stems(*from, *to, *format); }; });
  }
  // group
  {
    auto* cmd = app.add_subcommand("group", "arithmetic in a level group over a space model");
    cmd->require_subcommand(1);
    struct SubSpec {
      const char* name;
      const char* help;
    };
    for (const SubSpec& spec : {SubSpec{"mul", "product of two elements"},
                                SubSpec{"inv", "inverse of an element"},
                                SubSpec{"comm", "commutator of two elements"},
                                SubSpec{"order", "order of an element"},
                                SubSpec{"pow", "integer power of an element"},
                                SubSpec{"is-abelian", "abelianness with witness"},
                                SubSpec{"enumerate", "full enumeration of a finite level group"}}) {
      auto* sub = cmd->add_subcommand(spec.name, spec.help);
      auto args = std::make_shared<GroupArgs>();
      const std::string sub_name = spec.name;
      sub->add_option("--space", args->space, "catalog:NAME or a space-model file")->required();
      sub->add_option("--level", args->level, "group level")->required();
      sub->add_option("elements", args->elements, "element literal(s)");
      if (sub_name == "pow")
        sub->add_option("--exponent", args->exponent, "integer exponent")->required();
      if (sub_name == "order") sub->add_option("--bound", args->bound, "largest order probed");
      if (sub_name == "enumerate")
        sub->add_option("--size-bound", args->size_bound, "largest group size enumerated");
      sub->callback(
          [&run, sub_name, args] { run = [sub_name, args] { return cmd_group(sub_name, *args); }; });
    }
  }
  // tau
  {
    auto* cmd = app.add_subcommand("tau", "class-2 torus arithmetic and multiplicities");
    cmd->require_subcommand(1);
    struct SubSpec {
      const char* name;
      const char* help;
    };
    for (const SubSpec& spec : {SubSpec{"mul", "cocycle product of two elements"},
                                SubSpec{"comm", "commutator of two elements"},
                                SubSpec{"multiplicities", "graded multiplicities of a torus level"}}) {
      auto* sub = cmd->add_subcommand(spec.name, spec.help);
      auto args = std::make_shared<TauArgs>();
      const std::string sub_name = spec.name;
      sub->add_option("--space", args->space, "catalog:NAME or a space-model file")->required();
      if (sub_name == "multiplicities") {
        sub->add_option("--index", args->tau_index, "torus level index")->required();
      } else {
        sub->add_option("--level", args->level, "element level (models the index level + 1)")
            ->required();
        sub->add_option("elements", args->elements, "tau element literal(s)");
      }
      sub->callback(
          [&run, sub_name, args] { run = [sub_name, args] { return cmd_tau(sub_name, *args); }; });
    }
  }
  // verify
  {
    auto* cmd = app.add_subcommand("verify", "run the verification suite");
    auto only = std::make_shared<std::string>("");
    cmd->add_option("--only", *only, "restrict to one module block");
    cmd->callback([=, &run] { run = [=] { return cmd_verify(*only); }; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return run ? run() : kExitUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputFile;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
