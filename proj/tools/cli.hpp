#pragma once

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "osborn/osborn.hpp"

namespace osborn::cli {

enum Exit : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

struct UsageError : Error {
  using Error::Error;
};

namespace detail {

struct Globals {
  bool json = false;
  bool strict = false;
};

inline LoopTable load_loop(const std::string& path) { return as_loop(read_table_file(path)); }

inline Element parse_element(const std::string& text, std::size_t order, const std::string& what) {
  std::size_t pos = 0;
  long v = -1;
  try {
    v = std::stol(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || v < 0 || static_cast<std::size_t>(v) >= order) {
    throw UsageError(what + " must be an element index in [0, " + std::to_string(order) + ")");
  }
  return static_cast<Element>(v);
}

/// Reads whitespace-separated indices, or characters of `alphabet` when set.
inline std::vector<Element> read_messages(std::istream& in, std::size_t order, const std::string& alphabet) {
  std::vector<Element> msgs;
  if (alphabet.empty()) {
    std::string tok;
    while (in >> tok) msgs.push_back(parse_element(tok, order, "message '" + tok + "'"));
    return msgs;
  }
  char c;
  while (in.get(c)) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    const auto at = alphabet.find(c);
    if (at == std::string::npos) throw UsageError(std::string("character '") + c + "' not in alphabet");
    msgs.push_back(static_cast<Element>(at));
  }
  return msgs;
}

inline std::string write_messages(const std::vector<Element>& v, const std::string& alphabet) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (alphabet.empty()) {
      s += (i ? " " : "") + std::to_string(v[i]);
    } else {
      s += alphabet[v[i]];
    }
  }
  return s;
}

inline int finish(const Globals& g, bool ok) { return g.strict && !ok ? kCheckFailed : kOk; }

}  // namespace detail

/// Runs one command line. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  using detail::Globals;
  Globals g;
  CLI::App app{"Finite loop toolkit: identities, Osborn statement batteries, inverse cycles, ciphers", "osborn"};
  app.require_subcommand(1);
  app.add_flag("--json", g.json, "JSON output");
  app.add_flag("--strict", g.strict, "exit 1 when a check fails");

  std::string file, tag, catalog_dir, filter_expr, want_expr, out_dir, scheme, key_text, alphabet;
  std::size_t order = 0, max_order = 0;
  std::optional<std::size_t> limit;
  unsigned jobs = 1;
  bool stream = false, lambda_walk = false;

  auto sub = [&](const char* name, const char* desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  CLI::App* check = sub("check", "check one identity on a table");
  check->add_option("FILE", file, "table file")->required();
  check->add_option("--identity", tag, "identity tag, e.g. OS2")->required();

  CLI::App* props = sub("props", "full property report");
  props->add_option("FILE", file, "table file")->required();

  CLI::App* verify_cmd = sub("verify", "run a statement battery on a table or a saved catalog");
  auto* vfile = verify_cmd->add_option("FILE", file, "table file");
  auto* vcat = verify_cmd->add_option("--catalog", catalog_dir, "catalog directory");
  vfile->excludes(vcat);
  verify_cmd->add_option("--statement", tag, "statement tag, e.g. THM_1_5")->required();
  verify_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1U, 256U));

  CLI::App* cycles_cmd = sub("cycles", "inverse-cycle decomposition, or a census of a catalog");
  auto* cfile = cycles_cmd->add_option("FILE", file, "table file");
  auto* ccat = cycles_cmd->add_option("--catalog", catalog_dir, "catalog directory");
  cfile->excludes(ccat);

  CLI::App* mult = sub("multgroup", "orders of the multiplication and inner mapping groups");
  mult->add_option("FILE", file, "table file")->required();

  CLI::App* enumerate = sub("enumerate", "enumerate loops of one order");
  enumerate->add_option("--order", order, "loop order")->required()->check(CLI::Range(1U, 12U));
  enumerate->add_option("--filter", filter_expr, "conjunction of TAG and !TAG");
  enumerate->add_option("--out", out_dir, "write the catalog to this directory");
  enumerate->add_option("--limit", limit, "stop after this many loops");
  enumerate->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1U, 256U));

  CLI::App* find = sub("find", "first loop of order <= N passing a filter");
  find->add_option("--max", max_order, "largest order to search")->required()->check(CLI::Range(1U, 12U));
  find->add_option("--want", want_expr, "conjunction of TAG and !TAG")->required();

  CLI::App* crypto = sub("crypto", "encipher or decipher element streams read from stdin");
  std::string direction;
  crypto->add_option("DIRECTION", direction, "encrypt or decrypt")->required()->check(CLI::IsMember({"encrypt", "decrypt"}));
  crypto->add_option("--scheme", scheme, "cip or osborn")->required()->check(CLI::IsMember({"cip", "osborn"}));
  crypto->add_option("--table", file, "table file")->required();
  crypto->add_option("--key", key_text, "key element (seed in stream mode)")->required();
  crypto->add_flag("--stream", stream, "one key per message along the inverse cycle of the key");
  crypto->add_flag("--lambda", lambda_walk, "walk the key stream in the lambda direction");
  crypto->add_option("--alphabet", alphabet, "characters standing for elements 0..n-1");

  CLI::App* isotopes = sub("isotopes", "check an identity on every principal isotope");
  isotopes->add_option("FILE", file, "table file")->required();
  isotopes->add_option("--check", tag, "identity tag")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(std::move(rev));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (check->parsed()) {
      const LoopTable l = detail::load_loop(file);
      const IdentityId id = identity_from_name(tag);
      const CheckResult r = check_identity(l, id);
      if (g.json) {
        Json j = to_json(r);
        j["identity"] = std::string(name(id));
        out << j.dump(2) << '\n';
      } else {
        out << to_text(r) << '\n';
      }
      return detail::finish(g, r.holds);
    }

    if (props->parsed()) {
      const PropertyReport r = property_report(detail::load_loop(file));
      out << (g.json ? to_json(r).dump(2) + "\n" : to_text(r));
      return kOk;
    }

    if (verify_cmd->parsed()) {
      const StatementId s = statement_from_name(tag);
      VerificationReport r;
      if (!catalog_dir.empty()) {
        const Catalog cat = load_catalog(catalog_dir);
        r = verify_catalog(cat.loops, s, jobs);
      } else if (!file.empty()) {
        r = verify(detail::load_loop(file), s);
      } else {
        throw UsageError("verify needs FILE or --catalog DIR");
      }
      out << (g.json ? to_json(r).dump(2) + "\n" : to_text(r));
      return detail::finish(g, r.ok());
    }

    if (cycles_cmd->parsed()) {
      if (!catalog_dir.empty()) {
        const Catalog cat = load_catalog(catalog_dir);
        const auto census = cycle_census(cat.loops);
        out << (g.json ? to_json(census).dump(2) + "\n" : to_text(census));
      } else if (!file.empty()) {
        const CycleDecomposition d = rho_cycles(detail::load_loop(file));
        out << (g.json ? to_json(d).dump(2) + "\n" : to_text(d));
      } else {
        throw UsageError("cycles needs FILE or --catalog DIR");
      }
      return kOk;
    }

    if (mult->parsed()) {
      const LoopTable l = detail::load_loop(file);
      const PermGroup m = mult_group(l);
      const std::size_t inn = m.stabilizer(LoopTable::e).order();
      const std::size_t rho = inner_group(l, InnerFlavor::rho).order();
      const std::size_t lam = inner_group(l, InnerFlavor::lambda).order();
      const std::size_t mu = inner_group(l, InnerFlavor::mu).order();
      if (g.json) {
        Json j;
        j["mult_order"] = m.order();
        j["inner_order"] = inn;
        j["inner_rho_order"] = rho;
        j["inner_lambda_order"] = lam;
        j["inner_mu_order"] = mu;
        out << j.dump(2) << '\n';
      } else {
        out << "mult order " << m.order() << '\n'
            << "inner order " << inn << '\n'
            << "inner rho order " << rho << '\n'
            << "inner lambda order " << lam << '\n'
            << "inner mu order " << mu << '\n';
      }
      return kOk;
    }

    if (enumerate->parsed()) {
      SearchOptions opts;
      opts.limit = limit;
      opts.jobs = jobs;
      const Catalog cat = enumerate_loops(order, parse_filter(filter_expr), opts);
      if (!out_dir.empty()) save_catalog(out_dir, cat);
      if (g.json) {
        Json j;
        j["order"] = cat.order;
        j["filter"] = cat.filter;
        j["count"] = cat.size();
        j["digest"] = hex_digest(cat.digest);
        out << j.dump(2) << '\n';
      } else {
        out << "order " << cat.order << '\n'
            << "filter " << cat.filter << '\n'
            << "count " << cat.size() << '\n'
            << "digest " << hex_digest(cat.digest) << '\n';
      }
      return kOk;
    }

    if (find->parsed()) {
      const Filter want = parse_filter(want_expr);
      const auto hit = find_example(max_order, want);
      if (g.json) {
        Json j;
        j["want"] = want.to_string();
        j["found"] = hit.has_value();
        if (hit) {
          j["order"] = hit->order();
          j["digest"] = hex_digest(digest(*hit));
          j["table"] = table_json(*hit);
        }
        out << j.dump(2) << '\n';
      } else if (hit) {
        out << "# digest " << hex_digest(digest(*hit)) << '\n' << serialize(*hit);
      } else {
        out << "absent\n";
      }
      return detail::finish(g, hit.has_value());
    }

    if (crypto->parsed()) {
      const LoopTable l = detail::load_loop(file);
      if (!alphabet.empty() && alphabet.size() != l.order()) {
        throw UsageError("alphabet length " + std::to_string(alphabet.size()) + " differs from table order " +
                         std::to_string(l.order()));
      }
      const Element key = detail::parse_element(key_text, l.order(), "key");
      const CipherScheme cs(scheme == "cip" ? SchemeKind::cip : SchemeKind::osborn_ci, l, key);
      const std::vector<Element> msgs = detail::read_messages(in, l.order(), alphabet);
      const bool enc = direction == "encrypt";
      std::vector<Element> res;
      std::optional<KeySchedule> ks;
      if (stream) {
        ks = key_schedule(l, key, std::max<std::size_t>(1, msgs.size()), lambda_walk ? Side::lambda : Side::rho);
        res = enc ? encipher_stream(cs, *ks, msgs) : decipher_stream(cs, *ks, msgs);
        if (ks->reuse_warning) err << "warning: key cycle has period " << ks->period << ", keys repeat\n";
      } else {
        for (Element m : msgs) res.push_back(enc ? cs.encipher(m) : cs.decipher(m));
      }
      if (g.json) {
        Json j;
        j["scheme"] = std::string(scheme_name(cs.kind()));
        j["direction"] = direction;
        j["key"] = static_cast<int>(key);
        j["input"] = element_list(msgs);
        j["output"] = element_list(res);
        if (ks) {
          j["key_stream"] = element_list(ks->stream);
          j["period"] = ks->period;
          j["reuse_warning"] = ks->reuse_warning;
        }
        j["note"] = "teaching prototype: single-element messages, no padding or chaining, no security claim";
        out << j.dump(2) << '\n';
      } else {
        out << detail::write_messages(res, alphabet) << '\n';
      }
      return kOk;
    }

    if (isotopes->parsed()) {
      const LoopTable l = detail::load_loop(file);
      const IdentityId id = identity_from_name(tag);
      bool all = true;
      Json rows = Json::array();
      std::ostringstream text;
      for (std::size_t u = 0; u < l.order(); ++u) {
        for (std::size_t v = 0; v < l.order(); ++v) {
          const LoopTable iso = principal_isotope(l, static_cast<Element>(u), static_cast<Element>(v));
          const CheckResult r = check_identity(iso, id);
          all = all && r.holds;
          Json j = to_json(r);
          j["u"] = u;
          j["v"] = v;
          rows.push_back(j);
          text << u << ' ' << v << ' ' << to_text(r) << '\n';
        }
      }
      if (g.json) {
        Json j;
        j["identity"] = std::string(name(id));
        j["all_hold"] = all;
        j["isotopes"] = rows;
        out << j.dump(2) << '\n';
      } else {
        out << text.str() << (all ? "all isotopes hold\n" : "some isotopes fail\n");
      }
      return detail::finish(g, all);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace osborn::cli
