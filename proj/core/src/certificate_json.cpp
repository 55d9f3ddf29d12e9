#include <sstream>
#include <stdexcept>

#include "dquad/pipeline.hpp"
#include "json.hpp"

namespace dquad {

namespace {

using ojson = nlohmann::ordered_json;

ojson real_json(const Interval& value) {
  const Interval::Decimal dec = value.to_decimal();
  return ojson{{"mid", dec.mid}, {"radius", dec.radius}};
}

ojson certificate_json(const CaseCertificate& cert) {
  ojson chain = ojson::array();
  for (const auto& entry : cert.bound_chain) chain.push_back({{"stage", entry.stage}, {"bound", entry.bound.get_str()}});
  ojson solutions = ojson::array();
  for (const auto& s : cert.solutions) {
    ojson item{{"m", s.m}};
    item["n"] = s.n ? ojson(*s.n) : ojson(nullptr);
    item["x"] = s.x.get_str();
    item["d"] = s.d.get_str();
    solutions.push_back(std::move(item));
  }
  ojson reals = ojson::object();
  for (const auto& r : cert.reals) reals[r.name] = real_json(r.value);
  return ojson{{"schema_version", kCertificateSchemaVersion},
               {"k", cert.k},
               {"nu", cert.nu},
               {"route", route_name(cert.route)},
               {"c", cert.c.get_str()},
               {"c_minus_k_square", cert.c_minus_k_square},
               {"bound_chain", chain},
               {"solutions", solutions},
               {"conclusion", cert.conclusion},
               {"conclusive", cert.conclusive},
               {"caveats", cert.caveats},
               {"notes", cert.notes},
               {"reals", reals}};
}

std::string text_from_json(const ojson& arr) {
  std::ostringstream out;
  for (const auto& cert : arr) {
    out << "k=" << cert.at("k").get<long long>() << " nu=" << cert.at("nu").get<unsigned long long>() << " ["
        << cert.at("route").get<std::string>() << "] " << cert.at("conclusion").get<std::string>() << "\n";
    out << "  c = " << cert.at("c").get<std::string>() << "\n";
    for (const auto& entry : cert.at("bound_chain")) {
      out << "  " << entry.at("stage").get<std::string>() << ": n <= " << entry.at("bound").get<std::string>()
          << "\n";
    }
    for (const auto& s : cert.at("solutions")) {
      out << "  solution m=" << s.at("m").get<unsigned long long>();
      if (!s.at("n").is_null()) out << " n=" << s.at("n").get<unsigned long long>();
      out << " x=" << s.at("x").get<std::string>() << " d=" << s.at("d").get<std::string>() << "\n";
    }
    for (const auto& item : cert.at("reals").items()) {
      out << "  " << item.key() << " = " << item.value().at("mid").get<std::string>() << " +- "
          << item.value().at("radius").get<std::string>() << "\n";
    }
    for (const auto& note : cert.at("notes")) out << "  note: " << note.get<std::string>() << "\n";
    for (const auto& cav : cert.at("caveats")) out << "  caveat: " << cav.get<std::string>() << "\n";
  }
  return out.str();
}

ojson array_json(const std::vector<CaseCertificate>& certificates) {
  ojson arr = ojson::array();
  for (const auto& c : certificates) arr.push_back(certificate_json(c));
  return arr;
}

}  // namespace

std::string certificates_to_json(const std::vector<CaseCertificate>& certificates) {
  return array_json(certificates).dump(2) + "\n";
}

std::string certificates_to_text(const std::vector<CaseCertificate>& certificates) {
  return text_from_json(array_json(certificates));
}

std::string render_report(std::string_view json_text, ReportFormat format) {
  ojson arr;
  try {
    arr = ojson::parse(json_text);
  } catch (const nlohmann::json::parse_error& err) {
    throw std::invalid_argument(std::string("report: malformed JSON: ") + err.what());
  }
  if (!arr.is_array()) throw std::invalid_argument("report: expected a JSON array of certificates");
  try {
    for (const auto& cert : arr) {
      const int version = cert.at("schema_version").get<int>();
      if (version != kCertificateSchemaVersion) {
        throw std::invalid_argument("report: unsupported schema_version " + std::to_string(version));
      }
    }
    return format == ReportFormat::json ? arr.dump(2) + "\n" : text_from_json(arr);
  } catch (const nlohmann::json::exception& err) {
    throw std::invalid_argument(std::string("report: certificate missing fields: ") + err.what());
  }
}

}  // namespace dquad
