#pragma once

// Channel-coded physical-layer network coding for the two-way relay
// channel: finite-field/ring algebra, nonbinary LDPC codes and decoders,
// PSK/PAM constellations, multiple-access channels, NC mapping and the
// relay receiver family, and a Monte Carlo BER/FER harness.

#include "pnc/alphabet.hpp"
#include "pnc/rng.hpp"
#include "pnc/modem.hpp"
#include "pnc/channel.hpp"
#include "pnc/ncmap.hpp"
#include "pnc/ldpc.hpp"
#include "pnc/group.hpp"
#include "pnc/decoder.hpp"
#include "pnc/superimposed.hpp"
#include "pnc/demap.hpp"
#include "pnc/receivers.hpp"
#include "pnc/harness.hpp"
