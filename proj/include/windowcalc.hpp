#ifndef WINDOWCALC_HPP
#define WINDOWCALC_HPP

#include <windowcalc/bwb.hpp>
#include <windowcalc/characters.hpp>
#include <windowcalc/errors.hpp>
#include <windowcalc/graderestrict.hpp>
#include <windowcalc/lascoux.hpp>
#include <windowcalc/laurent.hpp>
#include <windowcalc/parallel.hpp>
#include <windowcalc/qpolynomial.hpp>
#include <windowcalc/rickard.hpp>
#include <windowcalc/tensorcalc.hpp>
#include <windowcalc/verify.hpp>
#include <windowcalc/weights.hpp>
#include <windowcalc/windows.hpp>

#endif
