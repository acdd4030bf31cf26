// Copyright 2026 The rislink Authors
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <array>
#include <string>

#include "rislink/channel.hpp"
#include "rislink/experiment.hpp"
#include "rislink/geometry.hpp"
#include "rislink/graph.hpp"
#include "rislink/huffman.hpp"
#include "rislink/link.hpp"
#include "rislink/metrics.hpp"
#include "rislink/modulation.hpp"
#include "rislink/ris.hpp"
#include "rislink/scene.hpp"
#include "rislink/sixbit.hpp"
#include "rislink/sweep.hpp"

namespace py = pybind11;
using namespace rislink;

namespace {

#define RISLINK_STR2(x) #x
#define RISLINK_STR(x) RISLINK_STR2(x)

using V3 = std::array<double, 3>;

Vec3 vec(const V3& v) { return {v[0], v[1], v[2]}; }
V3 arr(const Vec3& v) { return {v.x, v.y, v.z}; }

std::vector<Triplet> triplets_from(const std::vector<std::array<std::string, 3>>& list) {
  std::vector<Triplet> out;
  for (const auto& t : list) out.push_back({t[0], t[1], t[2]});
  return out;
}

py::dict score_dict(const TripletScore& s) {
  py::dict d;
  d["precision"] = s.precision;
  d["recall"] = s.recall;
  d["f1"] = s.f1;
  d["matches"] = s.matches;
  return d;
}

LinkBudget scalar_budget(double tx_power, double noise_power) {
  LinkBudget b;
  b.tx_power = tx_power;
  b.noise_power = noise_power;
  b.w_tx = Eigen::VectorXcd::Ones(1);
  b.w_rx = Eigen::VectorXcd::Ones(1);
  return b;
}

py::dict record_dict(const SweepRecord& r) {
  py::dict d;
  d["ratio"] = r.ratio;
  d["bits"] = r.bits;
  d["codeword"] = r.codeword;
  d["snr_db"] = r.snr_db;
  d["method"] = to_string(r.method);
  d["ber"] = r.ber;
  d["char_err"] = r.char_err;
  d["bleu"] = r.bleu;
  d["rel_bleu"] = r.rel_bleu;
  d["f1"] = r.f1;
  d["similarity"] = r.similarity;
  d["seed"] = r.seed;
  return d;
}

ExperimentConfig config_from(const std::string& json_text, const std::filesystem::path& base_dir) {
  return config_from_json(nlohmann::json::parse(json_text), base_dir);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "RIS link-level simulator core";
  m.attr("__version__") = RISLINK_STR(VERSION_INFO);

  py::register_exception<DegenerateGeometry>(m, "DegenerateGeometry", PyExc_ValueError);
  py::register_exception<LinkOutage>(m, "LinkOutage", PyExc_RuntimeError);

  m.def("wavelength", &wavelength, py::arg("frequency_hz"));

  py::class_<PlanarArray>(m, "PlanarArray")
      .def_static(
          "facing",
          [](const V3& center, int rows, int cols, double spacing, const V3& normal) {
            return PlanarArray::facing(vec(center), rows, cols, spacing, vec(normal));
          },
          py::arg("center"), py::arg("rows"), py::arg("cols"), py::arg("spacing"), py::arg("normal"))
      .def_property_readonly("center", [](const PlanarArray& a) { return arr(a.center); })
      .def_property_readonly("normal", [](const PlanarArray& a) { return arr(a.normal); })
      .def_readonly("rows", &PlanarArray::rows)
      .def_readonly("cols", &PlanarArray::cols)
      .def_readonly("spacing", &PlanarArray::spacing)
      .def("__len__", &PlanarArray::size)
      .def("positions", [](const PlanarArray& a) {
        Eigen::MatrixXd out(static_cast<Eigen::Index>(a.size()), 3);
        for (std::size_t k = 0; k < a.size(); ++k) {
          const Vec3 p = element_position(a, k);
          out.row(static_cast<Eigen::Index>(k)) << p.x, p.y, p.z;
        }
        return out;
      });

  m.def(
      "los_channel",
      [](const PlanarArray& tx, const PlanarArray& rx, double lambda, double exponent, double reference_loss_db) {
        PathLossModel pl;
        pl.exponent = exponent;
        pl.reference_loss_db = reference_loss_db;
        return los_channel(tx, rx, lambda, pl).entries;
      },
      py::arg("tx"), py::arg("rx"), py::arg("wavelength"), py::arg("exponent") = 4.0,
      py::arg("reference_loss_db") = 0.0);
  m.def(
      "steering_precoder",
      [](const PlanarArray& tx, const V3& target, double lambda) { return steering_precoder(tx, vec(target), lambda); },
      py::arg("tx"), py::arg("target"), py::arg("wavelength"));

  m.def("wrap_phase", &wrap_phase);
  m.def("quantize_phase", &quantize_phase, py::arg("theta"), py::arg("bits"));
  m.def(
      "quantize_phases",
      [](const std::vector<double>& phases, int bits) {
        std::vector<double> out(phases.size());
        for (std::size_t i = 0; i < phases.size(); ++i) out[i] = quantize_phase(phases[i], bits);
        return out;
      },
      py::arg("phases"), py::arg("bits"));
  m.def("active_mask", &active_mask, py::arg("ris"), py::arg("ratio"));
  m.def("random_active_mask", &random_active_mask, py::arg("ris"), py::arg("ratio"), py::arg("seed"));
  m.def(
      "conjugate_phases",
      [](const Eigen::VectorXcd& cascade, const ActiveMask& mask) { return conjugate_phases(cascade, mask).phases; },
      py::arg("cascade"), py::arg("mask"));
  m.def(
      "reflected_gain",
      [](const Eigen::VectorXcd& cascade, const std::vector<double>& phases, const ActiveMask& mask) {
        return reflected_gain(cascade, RisConfiguration::continuous(phases, mask)).value;
      },
      py::arg("cascade"), py::arg("phases"), py::arg("mask"));

  py::class_<LinkScene>(m, "Scene")
      .def(py::init([](const std::string& config_json, const std::filesystem::path& base_dir) {
             return build_scene(config_from(config_json, base_dir));
           }),
           py::arg("config_json") = "{}", py::arg("base_dir") = std::filesystem::path{})
      .def_readonly("tx", &LinkScene::tx)
      .def_readonly("ris", &LinkScene::ris)
      .def_readonly("rx", &LinkScene::rx)
      .def_readonly("wavelength", &LinkScene::wavelength)
      .def_property_readonly("h_ris_tx", [](const LinkScene& s) { return s.h_ris_tx.entries; })
      .def_property_readonly("h_rx_ris", [](const LinkScene& s) { return s.h_rx_ris.entries; })
      .def_readonly("cascade", &LinkScene::cascade)
      .def_property_readonly("codebook_size", [](const LinkScene& s) { return s.codebook.size(); })
      .def(
          "select",
          [](const LinkScene& s, double ratio, std::optional<int> bits) {
            ExperimentConfig cfg = ExperimentConfig::defaults();
            const PointLink p = configure_point(s, cfg, ratio, bits, 0);
            py::dict d;
            d["codeword"] = p.codeword;
            d["gain"] = p.gain.value;
            d["snr_db"] = p.snr.db();
            d["active"] = p.configuration.active_count();
            d["phases"] = p.configuration.phases;
            d["oracle_snr_db"] = oracle_snr(s, p.mask).db();
            return d;
          },
          py::arg("ratio"), py::arg("bits") = py::none());

  m.def(
      "snr_db",
      [](std::complex<double> g, double tx_power, double noise_power) {
        return snr({g}, scalar_budget(tx_power, noise_power)).db();
      },
      py::arg("gain"), py::arg("tx_power"), py::arg("noise_power"));
  m.def(
      "transmit",
      [](const Eigen::MatrixXcd& symbols, std::complex<double> g, double tx_power, double noise_power,
         std::uint64_t seed) {
        return transmit({symbols, true}, {g}, scalar_budget(tx_power, noise_power), seed).values;
      },
      py::arg("symbols"), py::arg("gain"), py::arg("tx_power"), py::arg("noise_power"), py::arg("seed"));
  m.def(
      "equalize",
      [](const Eigen::MatrixXcd& received, std::complex<double> g, double tx_power) {
        return equalize({received, false}, {g}, tx_power).values;
      },
      py::arg("received"), py::arg("gain"), py::arg("tx_power"));
  m.def(
      "normalize_rows", [](const Eigen::MatrixXcd& s) { return normalize_rows({s, false}).values; },
      py::arg("symbols"));

  py::class_<HuffmanCode>(m, "HuffmanCode")
      .def_static(
          "build",
          [](const std::map<std::string, std::uint64_t>& counts) {
            FrequencyTable f;
            for (const auto& [k, v] : counts) {
              if (k.size() != 1) throw py::value_error("Huffman symbols must be single characters");
              f[static_cast<unsigned char>(k[0])] = v;
            }
            return HuffmanCode::build(f);
          },
          py::arg("counts"))
      .def_static("from_text", [](const std::string& text) { return HuffmanCode::build(count_symbols(text)); })
      .def_static("trained", &train_huffman, py::arg("texts"))
      .def("lengths",
           [](const HuffmanCode& c) {
             std::map<std::string, int> out;
             for (const auto& [k, v] : c.lengths()) out[std::string(1, static_cast<char>(k))] = v;
             return out;
           })
      .def("expected_length", &HuffmanCode::expected_length)
      .def("encode", &HuffmanCode::encode)
      .def("decode", &HuffmanCode::decode)
      .def("to_json", [](const HuffmanCode& c) { return c.to_json().dump(); });

  m.def("sixbit_encode", &sixbit_encode);
  m.def("sixbit_decode", &sixbit_decode);
  m.def("fold_to_sixbit_alphabet", &fold_to_sixbit_alphabet);
  m.attr("SIXBIT_ALPHABET") = std::string(kSixbitAlphabet);
  m.def(
      "qpsk_modulate",
      [](const BitStream& bits) {
        const ModulatedFrame f = qpsk_modulate(bits);
        return py::make_tuple(Eigen::MatrixXcd(f.symbols.values), f.pad_bits);
      },
      py::arg("bits"));
  m.def(
      "qpsk_demodulate", [](const Eigen::MatrixXcd& s, std::size_t pad) { return qpsk_demodulate({s, false}, pad); },
      py::arg("symbols"), py::arg("pad_bits") = 0);

  m.def("tokenize", &tokenize);
  m.def(
      "bleu",
      [](const std::string& candidate, const std::string& reference, int max_n) {
        return bleu(tokenize(candidate), tokenize(reference), max_n);
      },
      py::arg("candidate"), py::arg("reference"), py::arg("max_n") = 4);
  m.def(
      "corpus_bleu",
      [](const std::vector<std::string>& candidates, const std::vector<std::string>& references, int max_n) {
        std::vector<Tokens> c, r;
        for (const auto& s : candidates) c.push_back(tokenize(s));
        for (const auto& s : references) r.push_back(tokenize(s));
        return corpus_bleu(c, r, max_n);
      },
      py::arg("candidates"), py::arg("references"), py::arg("max_n") = 4);
  m.def("relative_bleu", py::overload_cast<double, double>(&relative_bleu), py::arg("bleu"),
        py::arg("max_bleu") = 0.6);
  m.def(
      "triplet_f1",
      [](const std::vector<std::array<std::string, 3>>& source, const std::vector<std::array<std::string, 3>>& decoded) {
        return score_dict(triplet_f1(KnowledgeGraph::from_triplets(triplets_from(source)),
                                     KnowledgeGraph::from_triplets(triplets_from(decoded))));
      },
      py::arg("source"), py::arg("decoded"));
  m.def("cosine_similarity", &cosine_similarity);
  m.def("char_error_rate", &char_error_rate);
  m.def("bit_error_rate", &bit_error_rate);

  m.def("default_config_json", [] { return config_to_json(ExperimentConfig::defaults()).dump(2); });
  m.def(
      "run_sweep",
      [](const std::string& config_json, const std::filesystem::path& base_dir, int jobs) {
        const auto records = run_sweep(config_from(config_json, base_dir), jobs);
        py::list out;
        for (const auto& r : records) out.append(record_dict(r));
        return out;
      },
      py::arg("config_json"), py::arg("base_dir") = std::filesystem::path{}, py::arg("jobs") = 1);
  m.def(
      "run_sweep_to_file",
      [](const std::filesystem::path& config, const std::filesystem::path& out, int jobs) {
        return run_sweep_to_file(load_config(config), out, jobs).size();
      },
      py::arg("config"), py::arg("out"), py::arg("jobs") = 1);
  m.def("records_to_csv", [](const std::string& config_json, const std::filesystem::path& base_dir, int jobs) {
    return records_to_csv(run_sweep(config_from(config_json, base_dir), jobs));
  }, py::arg("config_json"), py::arg("base_dir") = std::filesystem::path{}, py::arg("jobs") = 1);
}
