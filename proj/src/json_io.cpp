#include "ghzcert/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "ghzcert/error.hpp"

namespace ghzcert {

namespace {

Json int_vector_to_json(const IntVector& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(integer_to_json(x));
  return arr;
}

IntVector int_vector_from_json(const Json& j) {
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

Json form_to_json(int vertex, const LocalForm& form) {
  Json quadratic = Json::array();
  for (const auto& [ef, q] : form.quadratic) {
    quadratic.push_back(Json::array({ef.first, ef.second, integer_to_json(q)}));
  }
  Json linear = Json::array();
  for (const auto& [e, a] : form.linear) linear.push_back(Json::array({e, integer_to_json(a)}));
  return Json{{"vertex", vertex},
              {"quadratic", quadratic},
              {"linear", linear},
              {"constant", integer_to_json(form.constant)}};
}

LocalForm form_from_json(const Json& j) {
  LocalForm form;
  for (const auto& t : j.at("quadratic")) {
    form.quadratic[{t.at(0).get<std::size_t>(), t.at(1).get<std::size_t>()}] =
        integer_from_json(t.at(2));
  }
  for (const auto& t : j.at("linear")) {
    form.linear[t.at(0).get<std::size_t>()] = integer_from_json(t.at(1));
  }
  form.constant = integer_from_json(j.at("constant"));
  return form;
}

template <typename Fn>
auto parse_guarded(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const Json::exception& err) {
    throw Error(ErrorCode::ParseError, std::string("malformed ") + what + ": " + err.what());
  }
}

}  // namespace

Json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw Error(ErrorCode::ParseError, "expected an integer, got " + j.dump());
}

Json rational_to_json(const Rational& q) { return Json(to_string(q)); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  return Rational(integer_from_json(j));
}

Json hypergraph_to_json(const Hypergraph& h) {
  Json edges = Json::array();
  for (const Edge& e : h.edges()) edges.push_back(Json{{"vertices", e.vertices}, {"level", e.level}});
  return Json{{"k", h.vertex_count()}, {"edges", edges}};
}

Hypergraph hypergraph_from_json(const Json& j) {
  return parse_guarded("hypergraph", [&] {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      Edge edge;
      edge.vertices = e.at("vertices").get<std::vector<int>>();
      edge.level = e.value("level", 2);
      edges.push_back(std::move(edge));
    }
    return Hypergraph(j.at("k").get<int>(), std::move(edges));
  });
}

Json certificate_to_json(const Certificate& cert) {
  Json c = Json::array();
  for (const auto& v : cert.c) c.push_back(int_vector_to_json(v));
  Json solutions;
  if (cert.solutions) {
    solutions = Json::array();
    for (const auto& s : *cert.solutions) solutions.push_back(s);
  } else {
    solutions = Json{{"count", cert.count}, {"hash", cert.solutions_hash}};
  }
  Json assignment = Json::array();
  for (std::size_t j = 0; j < cert.assignment.forms.size(); ++j) {
    assignment.push_back(form_to_json(static_cast<int>(j + 1), cert.assignment.forms[j]));
  }
  return Json{{"hypergraph", hypergraph_to_json(cert.hypergraph)},
              {"lambda", cert.lambda},
              {"d", cert.d},
              {"c", c},
              {"C_prime", integer_to_json(cert.c_prime)},
              {"n", cert.n},
              {"g", int_vector_to_json(cert.g)},
              {"M", cert.count},
              {"solutions", solutions},
              {"assignment", assignment},
              {"achieved_rate", Json{{"log2_M", cert.log2_count}, {"log2_n", cert.log2_n}}},
              {"bound_rate", cert.bound_rate},
              {"seed", cert.seed},
              {"version", cert.version}};
}

Certificate certificate_from_json(const Json& j) {
  return parse_guarded("certificate", [&] {
    Certificate cert;
    cert.hypergraph = hypergraph_from_json(j.at("hypergraph"));
    cert.lambda = j.at("lambda").get<int>();
    cert.d = j.at("d").get<std::size_t>();
    for (const auto& v : j.at("c")) cert.c.push_back(int_vector_from_json(v));
    cert.c_prime = integer_from_json(j.at("C_prime"));
    cert.n = j.at("n").get<int>();
    cert.g = int_vector_from_json(j.at("g"));
    cert.count = j.at("M").get<std::uint64_t>();
    const Json& solutions = j.at("solutions");
    if (solutions.is_array()) {
      std::vector<IndexTuple> listed;
      for (const auto& s : solutions) listed.push_back(s.get<IndexTuple>());
      cert.solutions = std::move(listed);
    } else {
      cert.solutions_hash = solutions.at("hash").get<std::string>();
      if (solutions.at("count").get<std::uint64_t>() != cert.count) {
        throw Error(ErrorCode::ParseError, "solutions.count disagrees with M");
      }
    }
    for (const auto& form : j.at("assignment")) {
      const int vertex = form.at("vertex").get<int>();
      if (vertex != static_cast<int>(cert.assignment.forms.size()) + 1) {
        throw Error(ErrorCode::ParseError, "assignment tables must be listed by vertex 1..k");
      }
      cert.assignment.forms.push_back(form_from_json(form));
    }
    cert.log2_count = j.at("achieved_rate").at("log2_M").get<double>();
    cert.log2_n = j.at("achieved_rate").at("log2_n").get<double>();
    cert.bound_rate = j.at("bound_rate").get<int>();
    cert.seed = j.at("seed").get<std::uint64_t>();
    cert.version = j.at("version").get<std::string>();
    if (cert.version != "1") {
      throw Error(ErrorCode::ParseError, "unsupported certificate version " + cert.version);
    }
    return cert;
  });
}

Json report_to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    const char* status = c.status == CheckStatus::Passed   ? "pass"
                         : c.status == CheckStatus::Failed ? "fail"
                                                           : "skipped";
    checks.push_back(Json{{"name", c.name}, {"status", status}, {"detail", c.detail}});
  }
  return Json{{"ok", report.ok()}, {"checks", checks}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& err) {
    throw Error(ErrorCode::ParseError, path + ": " + err.what());
  }
}

Hypergraph read_hypergraph_file(const std::string& path) {
  return hypergraph_from_json(read_json_file(path));
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "failed writing " + path);
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ghzcert
