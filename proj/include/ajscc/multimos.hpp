#pragma once

#include <vector>

#include <ajscc/receiver.hpp>

namespace ajscc {

/// Several devices sharing one global level grid; level i is driven by
/// device assignment[i]. Each device then carries only every n-th level,
/// so its own curves sit n*phi apart.
struct MosfetBank {
    std::vector<MosfetParams> devices;
    std::vector<int> assignment;  // level index -> device index
    std::vector<double> levels;   // global vgs grid [V]
};

/// Round-robin interleave: level i -> device (i mod n_devices). Every
/// device starts as a copy of base.
/// Throws std::invalid_argument when n_devices < 1 or exceeds the level
/// count.
MosfetBank assign_levels(const std::vector<double>& levels, int n_devices,
                         const MosfetParams& base = MosfetParams{});

/// The sub-grid assigned to one device, in increasing order.
std::vector<double> device_levels(const MosfetBank& bank, int device_index);

/// genie: each pair is decoded against only the transmitting device's
/// sub-grid (the receiver is told which device fired — the best case).
/// union: one flat candidate set of all levels, no device knowledge.
enum class BankMode { kGenie, kUnion };

/// decode_stream over a bank. Genie mode identifies the transmitting
/// device from the (evaluation-only) truth level of each curve segment;
/// union mode decodes against the full grid using the first device's
/// parameters (the bank is homogeneous unless overridden).
DecodeRun decode_bank(const MosfetBank& bank,
                      const std::vector<EncodedSample>& samples,
                      BankMode mode, bool apply_correction,
                      Pairing pairing = Pairing::kSliding,
                      double vds_min = 4.5, double vds_max = 10.0);

}  // namespace ajscc
