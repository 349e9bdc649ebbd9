#pragma once

namespace wsf {

double kummer_1f1(double a, double b, double x);

// |x| < 1 only
double gauss_2f1(double a, double b, double c, double x);

// Confluent Appell Phi1(a,b;c;x,y), |x| < 1
double humbert_phi1(double a, double b, double c, double x, double y);

// sum_{l,i} (a)_{l+i} x^l y^i / ((c)_{l+i} (b)_l l! i!)
// Throws LossOfSignificance when the partial sums cancel below 1e-8 of the
// largest term.
double kdf_f1110(double a, double c, double b, double x, double y);

// Same double series summed by rows, each row folded into a Kummer function
// with the transformation e^y 1F1(c-a; c+l; -y).  All terms are positive when
// y < 0 and c > a, which is the regime where kdf_f1110 cancels.
double kdf_f1110_rows(double a, double c, double b, double x, double y);

}  // namespace wsf
