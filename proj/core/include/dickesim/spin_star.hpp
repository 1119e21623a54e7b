#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "dickesim/dicke.hpp"

namespace dickesim {

// State over ancilla x symmetric-ladder basis.  Index a*(L+1) + k with
// ancilla a in {0, 1} and k the number of excited probe spins, so |k>
// is the z-basis Dicke state |D^L_k>_z.
struct LadderState {
  int L = 0;
  Eigen::VectorXcd amps;  // dimension 2(L+1)

  static LadderState ground(int L);  // |0>|D_0>
  double norm() const { return amps.norm(); }
};

inline int ladder_index(int L, int a, int k) { return a * (L + 1) + k; }

// Drive and coupling parameters of the ancilla-probe star system.
struct StarParams {
  double omega_A = 0.0;    // ancilla frequency, rad/s
  double omega_P = 0.0;    // probe frequency, rad/s
  double lambda = 0.0;     // collective transverse coupling, rad/s
  double lambda_d = 0.0;   // ancilla Rabi amplitude, rad/s
  double lambda_dp = 0.0;  // probe collective Rabi amplitude, rad/s
  double omega_d = 0.0;    // ancilla drive frequency, rad/s
  double omega_dp = 0.0;   // probe drive frequency, rad/s
};

// Collective ladder operators on the (L+1)-dimensional Dicke ladder:
// <k+1| Jp |k> = sqrt((k+1)(L-k)).
Eigen::MatrixXd ladder_jplus(int L);
Eigen::MatrixXcd ladder_jy(int L);

// Lab-frame star Hamiltonian on the ladder basis.  With `resonant` the
// ancilla frequency is pinned to omega_P.
Eigen::MatrixXcd star_hamiltonian(int L, const StarParams& p, bool resonant);

// Half Rabi period of the resonant flip-flop block |1,k> <-> |0,k+1>:
//   pi / (2 lambda sqrt((k+1)(L-k)))
double transfer_time(int k, int L, double lambda);

struct PulseEvent {
  std::string stage;
  std::string type;
  double duration_s = 0.0;
  double frequency_rad_s = 0.0;
  double amplitude_rad_s = 0.0;
};
using PulseSchedule = std::vector<PulseEvent>;

void write_schedule_csv(std::ostream& os, const PulseSchedule& schedule);

struct PrepResult {
  LadderState state;       // after the final collective rotation
  double fidelity_z = 0.0; // |<0, D_{L/2}|psi>|^2 before the rotation
  double fidelity_x = 0.0; // overlap-squared with the x-basis target
  PulseSchedule schedule;
};

// L/2 rounds of (ancilla pi pulse, flip-flop transfer), then a collective
// pi/2 rotation about y.  Ideal pulses are instantaneous; otherwise they
// are square pulses with the flip-flop coupling retained.
PrepResult prepare_dicke(int L, const StarParams& p, bool ideal_pulses);

// Large-detuning effective Hamiltonian, diagonal on the ladder:
//   omega_P Jz + (omega_A/2) sz_A - lambda^2/(omega_A - omega_P) sz_A Jz^2
// Requires |omega_A - omega_P| >= 20 lambda sqrt(L).
Eigen::MatrixXcd dispersive_hamiltonian(int L, const StarParams& p);

// Frequency-selective collective drive in the rotating frame of
// omega_dp, with all ladder levels retained.  Requires the dispersive
// condition and selectivity lambda_dp <= (1/20) * 2 lambda^2 / detuning.
LadderState soft_pulse(const LadderState& state, const StarParams& p, double duration);

// Scan durations around the bare half-pi estimate and return the one
// maximizing transfer into the readout superposition.
double calibrate_soft_pulse_duration(int L, const StarParams& p);

struct ReadoutResult {
  Eigen::MatrixXcd u_read;  // 2(L+1) x 2(L+1), drive rotating frame
  double fidelity = 0.0;    // |<Read|U|0, D_0>|^2 against the ladder-built target
  PulseSchedule schedule;
};

// Composes the preparation flip-flops, the selective soft pulse, and
// the final collective rotation into the readout unitary.
ReadoutResult build_u_read(int L, const StarParams& p, bool ideal);

// Readout target in the ladder basis: the collective rotation applied to
// (|0,D_{L/2}> - i |0,D_{L/2+1}>)/sqrt(2); equals the embedded read_state.
LadderState ladder_read_target(int L);

// Dense 2^L embedding of the ancilla-0 sector (up spin = bit 0).
StateVector embed_probe_sector(const LadderState& st);

}  // namespace dickesim
