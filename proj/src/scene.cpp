// Copyright 2026 The rislink Authors
// SPDX-License-Identifier: Apache-2.0

#include "rislink/scene.hpp"

#include "rislink/seed.hpp"

namespace rislink {

namespace {

PlanarArray realize(const ArraySpec& spec, double wavelength, const Vec3& default_normal) {
  return PlanarArray::facing(spec.center, spec.rows, spec.cols, spec.spacing_wavelengths * wavelength,
                             spec.normal.value_or(default_normal));
}

}  // namespace

LinkScene build_scene(const ExperimentConfig& cfg) {
  cfg.validate();
  LinkScene s;
  s.wavelength = wavelength(cfg.carrier_frequency_hz);
  const auto& sc = cfg.scene;
  const Vec3 midpoint = (sc.tx.center + sc.rx.center) * 0.5;
  s.tx = realize(sc.tx, s.wavelength, sc.ris.center - sc.tx.center);
  s.ris = realize(sc.ris, s.wavelength, midpoint - sc.ris.center);
  s.rx = realize(sc.rx, s.wavelength, sc.ris.center - sc.rx.center);

  s.h_ris_tx = los_channel(s.tx, s.ris, s.wavelength, cfg.path_loss);
  s.h_rx_ris = los_channel(s.ris, s.rx, s.wavelength, cfg.path_loss);
  s.budget.tx_power = cfg.tx_power_w;
  s.budget.noise_power = dbm_to_watts(cfg.noise_dbm);
  s.budget.w_tx = steering_precoder(s.tx, s.ris.center, s.wavelength);
  s.budget.w_rx = unit_combiner(static_cast<Eigen::Index>(s.rx.size()));
  s.budget.validate();
  s.cascade = cascade_coefficients(s.h_ris_tx, s.h_rx_ris, s.budget.w_tx, s.budget.w_rx);
  s.codebook = build_codebook(s.ris, s.tx.center - s.ris.center, cfg.codebook, s.wavelength);
  return s;
}

ActiveMask point_mask(const LinkScene& scene, const ExperimentConfig& cfg, double ratio, std::size_t ratio_index) {
  if (cfg.mask == MaskMode::kRandom) {
    return random_active_mask(scene.ris, ratio, derive_seed(cfg.seed, {0x6d61736bULL, ratio_index}));
  }
  return active_mask(scene.ris, ratio);
}

PointLink configure_point(const LinkScene& scene, const ExperimentConfig& cfg, double ratio, const Quantization& bits,
                          std::size_t ratio_index) {
  PointLink p;
  p.mask = point_mask(scene, cfg, ratio, ratio_index);
  if (cfg.selection == SelectionOrder::kSelectThenQuantize) {
    Selection sel = select_codeword(scene.codebook, scene.cascade, scene.budget, p.mask, std::nullopt);
    p.codeword = sel.index;
    p.configuration = bits ? quantize_phases(sel.configuration, *bits) : std::move(sel.configuration);
  } else {
    Selection sel = select_codeword(scene.codebook, scene.cascade, scene.budget, p.mask, bits);
    p.codeword = sel.index;
    p.configuration = std::move(sel.configuration);
  }
  p.gain = reflected_gain(scene.cascade, p.configuration);
  p.snr = snr(p.gain, scene.budget);
  return p;
}

Snr oracle_snr(const LinkScene& scene, const ActiveMask& mask) {
  return snr(reflected_gain(scene.cascade, conjugate_phases(scene.cascade, mask)), scene.budget);
}

}  // namespace rislink
