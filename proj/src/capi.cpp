#include "ttk.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "ttk/arcdiagram.hpp"
#include "ttk/bounds.hpp"
#include "ttk/heegaard.hpp"
#include "ttk/support.hpp"

struct ttk_track {
  ttk::ParsedTrack p;
};
struct ttk_cycle {
  ttk::AgolCycle c;
};
struct ttk_complex {
  ttk::TwistedComplex c;
};

namespace {

thread_local std::string g_error;
thread_local std::string g_code;

char* dup(const std::string& s) {
  char* r = static_cast<char*>(std::malloc(s.size() + 1));
  if (r) std::memcpy(r, s.c_str(), s.size() + 1);
  return r;
}

template <class F>
ttk_status guard(F&& f) {
  g_error.clear();
  g_code.clear();
  try {
    f();
    return TTK_OK;
  } catch (const ttk::Error& e) {
    g_error = e.what();
    g_code = e.code();
    switch (e.kind()) {
      case ttk::ErrorKind::Domain:
        return TTK_ERR_DOMAIN;
      case ttk::ErrorKind::Input:
        return TTK_ERR_INPUT;
      default:
        return TTK_ERR_INTERNAL;
    }
  } catch (const std::bad_alloc&) {
    g_error = "out of memory";
    g_code = "Internal";
  } catch (const std::exception& e) {
    g_error = e.what();
    g_code = "Internal";
  }
  return TTK_ERR_INTERNAL;
}

void need(const void* p, const char* what) {
  if (!p) ttk::input_error("NullArgument", std::string(what) + " is null");
}

const ttk::Measure& measure_of(const ttk_track* t) {
  if (!t->p.measure) ttk::input_error("MissingMeasure", "track file has no measure");
  return *t->p.measure;
}

std::string events_str(const std::vector<ttk::SplitEvent>& evs) {
  std::string s;
  for (const auto& e : evs) {
    if (!s.empty()) s += " ";
    s += std::to_string(e.branch) + ":" + ttk::case_name(e.kase);
  }
  return s;
}

}  // namespace

extern "C" {

const char* ttk_version(void) { return "0.1.0"; }
const char* ttk_last_error(void) { return g_error.c_str(); }
const char* ttk_last_error_code(void) { return g_code.c_str(); }
void ttk_string_free(char* s) { std::free(s); }
void ttk_set_threads(int n) { ttk::set_thread_count(n); }

ttk_status ttk_track_parse(const char* text, ttk_track** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    auto* t = new ttk_track{ttk::parse_track(text)};
    *out = t;
  });
}

void ttk_track_free(ttk_track* t) { delete t; }

ttk_status ttk_track_write(const ttk_track* t, char** out) {
  return guard([&] {
    need(t, "track");
    need(out, "out");
    *out = dup(ttk::write_track(t->p.track, t->p.measure));
  });
}

ttk_status ttk_track_validate(const ttk_track* t, int* ok, char** report) {
  return guard([&] {
    need(t, "track");
    auto r = ttk::validate(t->p.track, t->p.measure);
    if (ok) *ok = r.ok() ? 1 : 0;
    if (report) *report = dup(r.str());
  });
}

ttk_status ttk_track_split(const ttk_track* t, const char* branch, ttk_track** out, char** event) {
  return guard([&] {
    need(t, "track");
    need(branch, "branch");
    need(out, "out");
    const auto& tr = t->p.track;
    int b = -1;
    for (int i = 0; i < tr.num_branches(); ++i)
      if (tr.branch_names[i] == branch) b = i;
    if (b < 0) ttk::input_error("UnknownBranch", std::string("no branch named ") + branch);
    auto r = ttk::split(tr, measure_of(t), b);
    auto* n = new ttk_track{ttk::ParsedTrack{r.track, r.measure}};
    *out = n;
    if (event) *event = dup(std::string(branch) + ":" + ttk::case_name(r.event.kase));
  });
}

ttk_status ttk_track_maximal_split(const ttk_track* t, ttk_track** out, char** events) {
  return guard([&] {
    need(t, "track");
    need(out, "out");
    auto r = ttk::maximal_split(t->p.track, measure_of(t));
    *out = new ttk_track{ttk::ParsedTrack{r.track, r.measure}};
    if (events) *events = dup(events_str(r.events));
  });
}

ttk_status ttk_cycle_find(const ttk_track* t, int max_iters, ttk_cycle** out) {
  return guard([&] {
    need(t, "track");
    need(out, "out");
    *out = new ttk_cycle{ttk::find_agol_cycle(t->p.track, measure_of(t), max_iters)};
  });
}

ttk_status ttk_cycle_parse(const char* text, ttk_cycle** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new ttk_cycle{ttk::parse_cycle(text)};
  });
}

void ttk_cycle_free(ttk_cycle* c) { delete c; }

ttk_status ttk_cycle_write(const ttk_cycle* c, char** out) {
  return guard([&] {
    need(c, "cycle");
    need(out, "out");
    *out = dup(ttk::write_cycle(c->c));
  });
}

ttk_status ttk_cycle_shape(const ttk_cycle* c, int* n, int* m) {
  return guard([&] {
    need(c, "cycle");
    if (n) *n = c->c.n;
    if (m) *m = c->c.m;
  });
}

ttk_status ttk_cycle_bounds(const ttk_cycle* c, int structured, char** report) {
  return guard([&] {
    need(c, "cycle");
    need(report, "report");
    auto b = ttk::compute_bounds(c->c);
    *report = dup(structured ? b.structured() + "\n" : b.str());
  });
}

ttk_status ttk_cycle_factorize(const ttk_cycle* c, const char* sigma, char** sequence, char** h1) {
  return guard([&] {
    need(c, "cycle");
    auto mark = ttk::parse_mark(sigma ? sigma : "", c->c.start);
    auto seq = ttk::factorize(c->c, mark);
    if (sequence) *sequence = dup(ttk::write_mark(mark, c->c.start) + seq.str());
    if (h1) {
      auto a = ttk::h1_action(seq);
      std::ostringstream os;
      os << "capped " << a.capped.rows << " " << a.capped.cols << "\n" << ttk::format_matrix(a.capped);
      os << "trace " << ttk::trace(a.capped) << "\n";
      os << "det " << ttk::determinant(a.capped) << "\n";
      *h1 = dup(os.str());
    }
  });
}

ttk_status ttk_heegaard(const ttk_track* t, const char* basis, const char* sigma, const char* bound_report,
                        int enumerate, char** out) {
  return guard([&] {
    need(t, "track");
    need(basis, "basis");
    need(out, "out");
    const auto& tr = t->p.track;
    auto curves = ttk::parse_basis(basis, tr);
    auto nb = ttk::normalize_basis(tr, curves);
    auto g = ttk::dual_graph(nb);
    auto sp = ttk::sigma_prime(g);
    auto mark = ttk::parse_mark(sigma ? sigma : "", tr);
    auto d = ttk::build_diagram(nb, mark, g, sp);
    auto gens = ttk::count_generators(d, enumerate != 0);
    auto tc = ttk::attach_tube_cutting(d, gens);
    std::ostringstream os;
    os << d.str();
    os << "generators " << gens.count << "\n";
    os << "tube_cut_generators " << tc.count << "\n";
    os << "tube_cut_factor_bound " << tc.factor_bound << "\n";
    std::optional<ttk::BoundReport> rep;
    if (bound_report && *bound_report)
      rep = ttk::parse_bound_report(bound_report);
    else if (t->p.measure)
      rep = ttk::compute_bounds(ttk::find_agol_cycle(tr, *t->p.measure, 200));
    if (rep) {
      if (rep->g != d.g || rep->s != d.s) ttk::domain_error("DimensionMismatch", "bound report is for another surface");
      auto bc = ttk::verify_bound(d, tc, *rep);
      os << "length " << d.length << "\n";
      os << "bound " << (bc.pass ? "pass" : "fail") << "\n";
      if (!bc.pass) os << "witness " << bc.witness << "\n";
    } else {
      os << "bound not checked\n";
    }
    if (enumerate) {
      os << "begin generators\n";
      for (const auto& x : gens.generators) {
        for (size_t j = 0; j < x.size(); ++j) os << (j ? " " : "") << x[j];
        os << "\n";
      }
      os << "end generators\n";
    }
    *out = dup(os.str());
  });
}

ttk_status ttk_complex_parse(const char* text, ttk_complex** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    auto c = ttk::parse_complex(text);
    if (!ttk::check_differential(c)) ttk::input_error("NotADifferential", "d·d is not zero");
    *out = new ttk_complex{c};
  });
}

void ttk_complex_free(ttk_complex* c) { delete c; }

ttk_status ttk_complex_support(const ttk_complex* c, int k_max, ttk_support_method method, int* dim,
                               char** report) {
  return guard([&] {
    need(c, "complex");
    auto m = method == TTK_SUPPORT_TANGENT  ? ttk::SupportMethod::Tangent
             : method == TTK_SUPPORT_POINTS ? ttk::SupportMethod::Points
                                            : ttk::SupportMethod::Both;
    auto r = ttk::support(c->c, k_max, m);
    if (dim) *dim = r.dim;
    if (report) *report = dup(r.str());
  });
}

}  // extern "C"
