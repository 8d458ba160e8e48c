//! Table text for the cycle families. The notation is read by the parsers
//! in the parent module:
//!
//! * generators: `name = (x, y);` in the variables `n m k a b`;
//! * definitions: `F when(valid): group group ... ;` where a group is
//!   `(±gen(a,b), ...)` optionally followed by an index set `G(e)`, `S(e)`
//!   or `T(e)` and/or a condition `when(c)`. A sign applies to the
//!   generator before the offset: `-g(a,b)` is `-g(0,0) + (a,b)`;
//! * cutouts: `F when(guard): v mark v mark ... ;` with vertices `(x, y)`,
//!   `#` marking a vertex that belongs, and `--` / `..` for an edge that
//!   belongs / does not. The last mark closes the polygon;
//! * selection: `F when(range);`.

pub(super) const GENERATORS: &str = "
alpha   = (n+a, -3m+b);
beta    = (n+m+a, b);
gamma   = (n+m-k+a, 3k+b);
delta   = (n+3m+k+a, -n+3k+b);
epsilon = (n+3m-k+a, 3k+b);
zeta    = (n+3m-3k+a, n+3k+b);
eta     = (n+k+a, -3m+3k+b);
theta   = (n-k+a, 3m+k+b);
iota    = (n+3k+a, -n-3m+3k+b);
kappa   = (n-3k+a, n+3m+k+b);
lambda  = (4n/3+3m+a, b);
mu      = (4n/3+3m-k+a, 3k+b);
nu      = (3m+a, n+b);
xi      = (3m+k+a, -n+k+b);
rho     = (3m-3k+a, n+k+b);
sigma   = (3k+a, -n-m+k+b);
tau     = (3k+a, -4n/3-3m+k+b);
";

/// Upper ends of the index sets `{1, ..., e}`.
pub(super) const INDEX_SETS: [(&str, &str); 3] = [("G", "(n+a)/3"), ("S", "n-3m-a"), ("T", "m+a")];

pub(super) const EXPLICIT: [&[(i64, i64)]; 14] = [
    &[(-2, 0), (2, 2), (0, -2), (-1, 2), (2, 0), (-1, -1), (0, 2), (2, -1)],
    &[(-3, 0), (3, 2), (-1, -2), (1, 3), (1, -3), (-2, 3), (3, -1)],
    &[(-4, 0), (4, 2), (-3, -3), (2, 4), (0, -4), (-1, 4), (3, -3), (-3, 2), (4, -1)],
    &[(-3, 0), (3, 3), (0, -4), (-2, 3), (4, 0), (-2, -2), (0, 3), (3, -2)],
    &[(-3, 0), (3, 3), (0, -4), (-2, 3), (4, 0), (-2, -2), (1, 3), (2, -2), (-2, 1), (3, 1), (-1, -2), (0, 3), (3, -2)],
    &[(-3, -1), (3, 3), (-1, -3), (0, 4), (2, -3), (-3, 2), (4, 0)],
    &[(-4, -2), (3, 4), (0, -4), (-1, 4), (3, -3), (-4, 2), (5, 0)],
    &[
        (-5, -1), (5, 3), (-3, -4), (2, 5), (0, -5), (-1, 5), (3, -4), (-4, 3), (5, -1), (-5, 0), (5, 2),
        (-4, -3), (3, 5), (-1, -5), (0, 6), (2, -5), (-3, 5), (5, -3), (-5, 2), (6, 0),
    ],
    &[
        (-5, 0), (5, 2), (-4, -3), (3, 5), (-1, -5), (0, 5), (2, -4), (-3, 4), (5, -2), (-5, 1), (5, 1),
        (-4, -2), (4, 4), (-2, -4), (1, 5), (1, -5), (-2, 5), (4, -4), (-4, 3), (5, -1),
    ],
    &[
        (-15, -5), (13, 10), (-9, -13), (5, 15), (0, -15), (-4, 15), (9, -12), (-12, 9), (15, -4), (-15, 0),
        (15, 5), (-12, -9), (9, 13), (-4, -15), (0, 16), (5, -15), (-9, 13), (13, -9), (-15, 5), (16, 0),
    ],
    &[(-4, 0), (4, 2), (-3, -2), (3, 3), (-2, -3), (2, 4), (0, -4), (-1, 4), (3, -3), (-3, 2), (4, -1)],
    &[
        (-7, 0), (7, 2), (-6, -3), (6, 5), (-4, -5), (3, 6), (-1, -6), (0, 7), (2, -6), (-3, 6), (5, -5),
        (-5, 4), (6, -2), (-6, 1), (7, 1), (-6, -2), (6, 4), (-5, -5), (4, 6), (-2, -6), (1, 7), (1, -7),
        (-2, 7), (4, -6), (-5, 6), (6, -4), (-6, 3), (7, -1),
    ],
    &[
        (-7, -1), (7, 3), (-6, -4), (6, 6), (-4, -6), (3, 7), (-1, -7), (0, 8), (2, -7), (-3, 7), (5, -6),
        (-6, 5), (7, -3), (-7, 2), (8, 0),
    ],
    &[
        (-10, 0), (10, 2), (-9, -3), (9, 5), (-7, -6), (6, 8), (-4, -8), (3, 9), (-1, -9), (0, 10), (2, -9),
        (-3, 9), (5, -8), (-6, 7), (8, -5), (-8, 4), (9, -2), (-9, 1), (10, 1), (-9, -2), (9, 4), (-8, -5),
        (7, 7), (-5, -8), (4, 9), (-2, -9), (1, 10), (1, -10), (-2, 10), (4, -9), (-5, 9), (7, -7), (-8, 6),
        (9, -4), (-9, 3), (10, -1),
    ],
];

pub(super) const DEFINITIONS: &str = "
1 when(n>=2 & -1<=m<=(n-5)/3):
  (-beta(0,0))
  (gamma(1,-1), -gamma(0,0)) T(1)
  (theta(0,3), -theta(1,-3)) S(5)
  (rho(7,-2), -rho(-5,2)) T(2)
  (-sigma(1,1), sigma(1,0)) T(1)
  (-xi(-3,0), xi(4,1)) S(5)
  (-eta(2,6), eta(-1,-4)) T(1);

2 when(n>=3 & -1<=m<=(n-6)/3):
  (-gamma(-1,1), gamma(1,1)) T(1)
  (-theta(0,-4), theta(0,5)) S(6)
  (-rho(-7,2), rho(6,-1)) T(2)
  (sigma(-1,-1), -sigma(0,1)) T(1)
  (xi(4,0), -xi(-4,0)) S(6)
  (eta(-2,-8), -eta(2,7)) T(2)
  (beta(1,1));

3 when(n>=5 & 0<=m<=(n-5)/3):
  (-gamma(-1,3), gamma(1,-1)) T(1)
  (-theta(0,-2), theta(0,3)) S(4)
  (-nu(-2,1), nu(2,0)) when(m==0)
  (-nu(-2,1), nu(2,0), -nu(0,0), nu(-1,1)) when(m!=0)
  (-rho(0,0), rho(-1,1)) T(-1)
  (sigma(-3,-1), -sigma(2,1)) T(1)
  (xi(2,0), -xi(-2,0)) S(4)
  (alpha(-1,-3), -alpha(1,2)) when(m==0)
  (alpha(-1,-3), -alpha(1,2), alpha(0,-1), -alpha(0,0)) when(m!=0)
  (eta(0,-1), -eta(0,0)) T(-1)
  (beta(0,-1));

4 when(n>=6 & 0<=m<=(n-6)/3):
  (-gamma(-1,2), gamma(1,0)) T(1)
  (-theta(0,-3), theta(0,4)) S(5)
  (-nu(-3,1), nu(3,0))
  (-rho(-4,1), rho(3,0)) T(1)
  (sigma(-1,-1), -sigma(0,1)) T(1)
  (xi(4,0), -xi(-4,0)) S(6)
  (alpha(-1,-5), -alpha(1,4))
  (eta(-1,-6), -eta(1,5)) T(1)
  (beta(1,0));

5 when(n>=2 & 0<=m<=(n-2)/3):
  (-gamma(-1,3), gamma(1,-1)) T(1)
  (-theta(0,-1), theta(0,2)) S(2)
  (-rho(-3,1), rho(2,0)) T(0)
  (sigma(-3,-1), -sigma(2,1)) T(1)
  (xi(1,0), -xi(-1,0)) S(2)
  (eta(-1,-4), -eta(1,3)) T(0)
  (beta(0,-1));

6 when(n>=4 & 0<=m<=(n-4)/3):
  (-gamma(-1,2), gamma(1,0)) T(1)
  (-theta(0,-2), theta(0,3)) S(3)
  (-rho(-4,1), rho(3,0)) T(1)
  (sigma(-1,-1), -sigma(0,1)) T(1)
  (xi(3,0), -xi(-3,0)) S(4)
  (eta(-1,-6), -eta(1,5)) T(1)
  (beta(1,0));

7 when(n>=5 & 0<=m<=(n-5)/5):
  (-beta(0,1))
  (gamma(1,-2), -gamma(0,1)) T(1)
  (theta(0,2), -theta(1,-2)) S(3)
  (rho(5,-1), -rho(-3,1)) T(1)
  (-sigma(2,1), sigma(0,0)) T(1)
  (-xi(-2,0), xi(3,1)) S(3)
  (-eta(1,4), eta(0,-2)) T(0);

8 when(n>=1 & (m==-1 | 0<=m<=(n-8)/5 | m==(n-4)/3)):
  (-gamma(-1,2), gamma(1,0)) T(1)
  (-theta(0,-3), theta(0,4)) S(4)
  (-rho(-5,1), rho(4,0)) T(1)
  (sigma(-2,-1), -sigma(1,1)) T(1)
  (xi(3,0), -xi(-3,0)) S(4)
  (eta(-1,-6), -eta(1,5)) T(1)
  (beta(1,0));

9 when(n>=4 & (n-4)/5<=m<=(n-4)/3):
  (-beta(0,0))
  (gamma(1,-1), -gamma(0,0)) T(0)
  (theta(1,1), -theta(0,-1)) S(3)
  (nu(3,-1), -nu(-1,1))
  (rho(4,-1), -rho(-2,1)) T(1)
  (-sigma(1,1), sigma(1,0)) T(0)
  (-xi(-1,1), xi(2,0)) S(3)
  (-alpha(1,2), alpha(0,-1))
  (-eta(1,3), eta(0,-1)) T(0);

10 when(n>=5 & (n-6)/5<=m<=(n-5)/3):
  (-gamma(-1,1), gamma(1,1)) T(1)
  (-theta(0,-3), theta(0,4)) S(5)
  (-nu(-3,1), nu(3,0))
  (-rho(-4,1), rho(3,0)) T(1)
  (sigma(-1,-1), -sigma(0,1)) T(1)
  (xi(3,0), -xi(-3,0)) S(5)
  (alpha(-1,-4), -alpha(1,3))
  (eta(-1,-5), -eta(1,4)) T(1)
  (beta(1,1));

11 when(n>=4 & (n-5)/5<=m<=(n-4)/3):
  (-beta(0,-2))
  (gamma(1,1), -gamma(0,-2)) T(0)
  (theta(1,2), -theta(0,-2)) S(4)
  (nu(4,-1), -nu(-2,1))
  (rho(5,-1), -rho(-3,1)) T(1)
  (-sigma(2,1), sigma(0,0)) T(1)
  (-xi(-2,0), xi(3,1)) S(3)
  (-eta(1,4), eta(0,-2)) T(1);

12 when(n>=6 & (n-7)/5<=m<=(n-6)/3):
  (-gamma(-1,1), gamma(1,1)) T(1)
  (-theta(0,-3), theta(0,4)) S(5)
  (-nu(-3,1), nu(3,0))
  (-rho(-4,1), rho(3,0)) T(1)
  (sigma(-1,-1), -sigma(0,1)) T(1)
  (xi(4,0), -xi(-4,0)) S(6)
  (eta(-2,-8), -eta(2,7)) T(2)
  (beta(1,1));

13 when(n>=3 & (n-3)/5<=m<=(n-3)/3):
  (-gamma(-1,3), gamma(1,-1)) T(1)
  (-theta(0,-1), theta(0,2)) S(3)
  (-nu(-1,1), nu(1,0))
  (-rho(-2,1), rho(1,0)) T(0)
  (sigma(-2,-1), -sigma(1,1)) T(0)
  (xi(0,-1), -xi(0,1)) S(1)
  (eta(-1,-4), -eta(1,3)) T(0)
  (beta(0,-1));

14 when(n>=2 & (n-7)/5<=m<=(n-5)/3):
  (-gamma(-1,2), gamma(1,0)) T(1)
  (-theta(0,-3), theta(0,4)) S(4)
  (-rho(-5,1), rho(4,0)) T(1)
  (sigma(-2,-2), -sigma(1,2)) T(1)
  (xi(3,-1), -xi(-3,1)) S(5)
  (alpha(-1,-5), -alpha(1,4))
  (eta(-1,-6), -eta(1,5)) T(1)
  (beta(1,0));

15 when(n>=4 & ((n-7)/5<=m<=(n-6)/3 | m==(n-4)/3)):
  (-gamma(-1,2), gamma(1,0)) T(1)
  (-theta(0,-3), theta(0,4)) S(5)
  (-nu(-3,1), nu(3,0))
  (-rho(-4,1), rho(3,0)) T(1)
  (sigma(-1,-1), -sigma(0,1)) T(1)
  (xi(3,0), -xi(-3,0)) S(4)
  (eta(-1,-6), -eta(1,5)) T(1)
  (beta(1,0));

16 when(n>=7 & (n-4)/5<=m<=(n-4)/3):
  (-gamma(-1,3), gamma(1,-1)) T(1)
  (-theta(0,-1), theta(0,2)) S(2)
  (-rho(-3,1), rho(2,0)) T(0)
  (sigma(-3,-1), -sigma(2,1)) T(1)
  (xi(2,0), -xi(-2,0)) S(4)
  (alpha(-1,-3), -alpha(1,2), alpha(0,-1), -alpha(0,0))
  (eta(0,-1), -eta(0,0)) T(-1)
  (beta(0,-1));

17 when(n>=5 & (n-5)/5<=m<=(n-5)/3):
  (-gamma(-1,1), gamma(1,1)) T(0)
  (-theta(-1,-1), theta(1,2)) S(2)
  (-rho(-4,1), rho(3,0)) T(1)
  (sigma(-1,-1), -sigma(0,1)) T(1)
  (xi(3,0), -xi(-3,0)) S(5)
  (alpha(-1,-4), -alpha(1,3))
  (eta(-1,-5), -eta(1,4)) T(1)
  (beta(1,1));

18 when(n>=8 & (n-4)/5<=m<=(n-5)/3):
  (-gamma(-1,3), gamma(1,-1)) T(1)
  (-theta(0,-2), theta(0,3)) S(4)
  (-rho(-5,2), rho(4,-1)) T(1)
  (sigma(-2,-1), -sigma(1,1)) T(1)
  (xi(2,0), -xi(-2,0)) S(4)
  (alpha(-1,-3), -alpha(1,2))
  (eta(-1,-4), -eta(1,3)) T(0)
  (beta(0,-1));

19 when(n>=3 & n%3==0 & (m==0 | 1<=m<=(n-3/2)*2/9)):
  (-mu(0,1), mu(0,1)) G(-3)
  (-zeta(-3,4), zeta(2,-2)) T(0)
  (-kappa(-3,2), kappa(2,-1)) G(0)
  (tau(-3,0), -tau(2,0)) G(0)
  (iota(-3,-2), -iota(2,1)) T(0)
  (delta(-1,-2), -delta(1,1)) G(0)
  (lambda(0,1));

19 when(n>=1 & n%3==1 & (m==0 | 1<=m<=(n-5/2)*2/9)):
  (-mu(-2/3,1), mu(2/3,1)) G(-1)
  (-zeta(-2,2), zeta(1,0)) T(0)
  (-kappa(-2,0), kappa(1,1)) G(-1)
  (tau(-3,-5/3), -tau(2,5/3)) G(-1)
  (iota(-4,-4), -iota(3,3)) T(1)
  (delta(0,-1), -delta(0,0)) G(-1)
  (lambda(2/3,1));

19 when(n>=5 & n%3==2 & (m==0 | 1<=m<=(n-7/2)*2/9)):
  (-mu(-7/3,3), mu(7/3,-1)) G(1)
  (-zeta(-3,2), zeta(2,0)) T(0)
  (-kappa(-3,0), kappa(2,1)) G(1)
  (tau(-2,-7/3), -tau(1,7/3)) G(-2)
  (iota(-4,-5), -iota(3,4)) T(1)
  (delta(1,-2), -delta(-1,1)) G(-2)
  (lambda(4/3,-1));
";

pub(super) const CUTOUTS: &str = "
0 when(n==1): #(2/3,2/3);
0 when(n==2): (12/13,5/13) .. (6/7,3/7) -- #(7/8,3/8) -- (10/11,4/11) ..;
0 when(n==3): (1,1/3) -- #(13/14,2/7) -- #(17/18,5/18) --;
0 when(n==4): (3/4,3/4) -- (2/3,2/3) --;
0 when(n==5): (3/4,2/3) .. (3/4,3/4) .. (2/3,2/3) ..;
0 when(n==6): (14/15,2/5) .. (5/6,1/2) .. (6/7,3/7) -- #(12/13,5/13) --;
0 when(n==7): (23/25,11/25) .. (10/11,5/11) -- #(8/9,4/9) -- (19/21,3/7) ..;
0 when(n==8): (1,1/3) .. (14/15,1/3) .. (16/17,5/17) .. (24/25,7/25) --;
0 when(n==9): (16/17,5/17) -- (15/16,5/16) --;
0 when(n==10): #(15/16,5/16);
0 when(n==11): (17/18,5/18) -- (14/15,4/15) --;
0 when(n==12): (48/49,9/49) .. (36/37,7/37) -- #(37/38,7/38) -- (43/44,2/11) ..;
0 when(n==13): (65/66,2/11) .. (35/36,7/36) .. (36/37,7/37) -- #(60/61,11/61) --;
0 when(n==14): (87/88,2/11) .. (51/52,5/26) -- #(57/58,5/29) --;

1 when(n==2 & m==-1): (1,1) -- (0,1) -- (1/2,1/2) ..;
1 when(n==3 & m==-1): (1,1/2) -- (3/4,1/2) -- (4/5,2/5) ..;
1 when(n>=4 & m==-1):
  (1,1/(n-1)) -- #(1-1/(n^2-2n+1), (n-1)/(n^2-2n+1)) -- (1-1/(n^2-2n+2), (n-1)/(n^2-2n+2)) ..;
1 when(n==5 & m==0): (1,1/4) -- (24/25,7/25) .. (18/19,5/19) -- #(21/22,5/22) --;
1 when(n>=9 & 0<=m<=(n-9)/5):
  (1,1/(n-1)) -- #(1-1/(n^2-n+nm-4m-3), (n+m)/(n^2-n+nm-4m-3))
  -- #(1-1/(n^2-n+nm+2m+2), (n+m)/(n^2-n+nm+2m+2)) --;
1 when(n>=6 & (n-8)/5<=m<=(n-5)/5):
  (1,1/(n-1)) -- (1-1/(8n+6nm-9m-11), (6m+8)/(8n+6nm-9m-11))
  .. (1-1/(n^2-2n+nm+m+5), (n+m)/(n^2-2n+nm+m+5)) -- #(1-1/(n^2-n+nm+2m+2), (n+m)/(n^2-n+nm+2m+2)) --;
1 when(n>=9 & (n-4)/5<=m<=(n-6)/3):
  (1,1/(n-1)) -- (1-1/(8n+6nm-9m-11), (6m+8)/(8n+6nm-9m-11))
  .. (1-1/(n^2-2n+nm+m+5), (n+m)/(n^2-2n+nm+m+5)) -- (1-1/(n^2+nm-3m-2), (n+m)/(n^2+nm-3m-2))
  .. (1-1/(4n+6nm-3m-2), (6m+4)/(4n+6nm-3m-2)) --;
1 when(n>=8 & m==(n-5)/3):
  (1,1/(n-1)) -- (1-1/(2n^2-6n+5), (2n-3)/(2n^2-6n+5)) .. (1-3/(4n^2-10n+7), (4n-5)/(4n^2-10n+7))
  -- (1-3/(4n^2-8n+9), (4n-5)/(4n^2-8n+9)) .. (1-1/(2n^2-7n+3), (2n-6)/(2n^2-7n+3)) --;

2 when(n==3 & m==-1): (7/8,5/8) .. (5/6,2/3) -- (2/3,2/3) .. (4/5,2/5) ..;
2 when(n==4 & m==-1): (1,1/3) .. (12/13,5/13) .. (8/9,1/3) .. (9/10,3/10) ..;
2 when(n>=7 & -1<=m<=(n-12)/5):
  (1,1/(n-1)) .. (1-1/(n^2-n+nm-4m-5), (n+m)/(n^2-n+nm-4m-5))
  .. (1-1/(n^2-n+nm+2m+4), (n+m)/(n^2-n+nm+2m+4)) ..;
2 when(n>=5 & (n-11)/5<=m<=(n-8)/5):
  (1,1/(n-1)) .. (1-1/(12n+6nm-9m-17), (6m+12)/(12n+6nm-9m-17))
  -- (1-1/(n^2-2n+nm+m+7), (n+m)/(n^2-2n+nm+m+7)) .. (1-1/(n^2-n+nm+2m+4), (n+m)/(n^2-n+nm+2m+4)) ..;
2 when(n>=11 & (n-7)/5<=m<=(n-8)/3):
  (1,1/(n-1)) .. (1-1/(12n+6nm-9m-17), (6m+12)/(12n+6nm-9m-17))
  -- (1-1/(n^2-2n+nm+m+7), (n+m)/(n^2-2n+nm+m+7)) .. (1-1/(n^2+nm-3m-4), (n+m)/(n^2+nm-3m-4))
  -- (1-1/(8n+6nm-3m-4), (6m+8)/(8n+6nm-3m-4)) ..;
2 when(n>=7 & m==(n-7)/3):
  (1,1/(n-1)) .. (1-1/(2n^2-6n+5), (2n-3)/(2n^2-6n+5)) .. (1-3/(4n^2-12n+11), (4n-7)/(4n^2-12n+11))
  .. (1-3/(4n^2-10n+9), (4n-7)/(4n^2-10n+9)) -- (1-1/(2n^2-7n+3), (2n-6)/(2n^2-7n+3)) ..;
2 when(n>=6 & m==(n-6)/3):
  (1-1/(2n^2-4n+2), (2n-1)/(2n^2-4n+2)) .. (1-3/(4n^2-13n+9), (4n-6)/(4n^2-13n+9))
  .. (1-3/(4n^2-11n+12), (4n-6)/(4n^2-11n+12)) ..;

3 when(n>=5 & 0<=m<=(n-5)/5):
  (1,1/(n-1)) .. (1-1/(n^2-n+nm+2m+2), (n+m)/(n^2-n+nm+2m+2))
  -- #(1-1/(n^2-n+nm+2m+3), (n+m)/(n^2-n+nm+2m+3)) --;
3 when(n>=8 & (n-4)/5<=m<=(n-5)/3):
  (1,1/(n-1)) .. (1-1/(4n+6nm-3m-2), (6m+4)/(4n+6nm-3m-2))
  -- #(1-1/(5n+6nm-3m-2), (6m+5)/(5n+6nm-3m-2)) --;

4 when(n>=8 & 0<=m<=(n-8)/5):
  (1,1/(n-1)) -- (1-1/(n^2-n+nm+2m+4), (n+m)/(n^2-n+nm+2m+4))
  .. (1-1/(n^2-n+nm+2m+5), (n+m)/(n^2-n+nm+2m+5)) ..;
4 when(n>=6 & (n-7)/5<=m<=(n-6)/3):
  (1,1/(n-1)) -- (1-1/(7n+6nm-3m-3), (6m+7)/(7n+6nm-3m-3))
  .. (1-1/(8n+6nm-3m-3), (6m+8)/(8n+6nm-3m-3)) ..;

5 when(2<=n<=3 & m==0):
  (1,1/n) -- #(1-1/(n^2+n-1), (n+1)/(n^2+n-1)) -- (1-1/n^2, n/n^2) ..;
5 when(n>=4 & m==0):
  (1,1/n) -- #(1-1/(n^2-1), n/(n^2-1)) -- (1-1/n^2, n/n^2) ..;
5 when(n>=9 & 1<=m<=(n-4)/5):
  (1,1/n) -- #(1-1/(n^2+nm-3m-1), (n+m)/(n^2+nm-3m-1)) -- (1-1/(n^2+nm-3m), (n+m)/(n^2+nm-3m)) ..;
5 when(n>=6 & (n-3)/5<=m<=(n-3)/3):
  (1,1/n) -- #(1-1/(4n+6nm-3m-1), (6m+4)/(4n+6nm-3m-1)) -- (1-1/(3n+6nm-3m), (6m+3)/(3n+6nm-3m)) ..;
5 when(n>=5 & m==(n-2)/3):
  (1,1/n) -- #(1-1/(2n^2-2n+1), (2n-1)/(2n^2-2n+1)) -- (1-1/(2n^2-3n+2), (2n-2)/(2n^2-3n+2)) ..;

6 when(n>=7 & 0<=m<=(n-7)/5):
  (1,1/n) .. (1-1/(n^2+nm-3m-3), (n+m)/(n^2+nm-3m-3)) .. (1-1/(n^2+nm-3m-2), (n+m)/(n^2+nm-3m-2)) --;
6 when(n>=5 & (n-6)/5<=m<=(n-5)/3):
  (1,1/n) .. (1-1/(7n+6nm-3m-3), (6m+7)/(7n+6nm-3m-3)) .. (1-1/(6n+6nm-3m-2), (6m+6)/(6n+6nm-3m-2)) --;
6 when(n>=4 & m==(n-4)/3):
  (1,1/n) .. (1-1/(2n^2-2n+1), (2n-1)/(2n^2-2n+1)) -- #(1-1/(2n^2-3n+2), (2n-2)/(2n^2-3n+2)) --;

7 when(n>=9 & 0<=m<=(n-9)/11):
  (1-1/(n^2+nm-3m-1), (n+m)/(n^2+nm-3m-1)) -- (1-1/(n^2-n+nm+2m+3), (n+m)/(n^2-n+nm+2m+3))
  .. (1-2/(n^2-n+nm+5m+6), (n+m)/(n^2-n+nm+5m+6)) -- (1-2/(n^2+nm-6m-2), (n+m)/(n^2+nm-6m-2)) ..;
7 when(n>=5 & (n-8)/11<=m<=(n-5)/5):
  (1-1/(n^2+nm-3m-1), (n+m)/(n^2+nm-3m-1)) -- (1-1/(n^2-n+nm+2m+3), (n+m)/(n^2-n+nm+2m+3))
  .. (1-1/(4n+6nm-3m-1), (6m+4)/(4n+6nm-3m-1)) ..;

8 when(n==1 & m==-1): (0,0) .. (0,1) .. (-1,1) -- #(-1,0) --;
8 when(n==2 & m==-1): (3/4,1/2) .. (2/3,2/3) .. (1/2,1/2) --;
8 when(n==3 & m==-1): (8/9,1/3) .. (7/8,3/8) -- (5/6,1/3) --;
8 when(n>=4 & m==-1):
  (1-1/n^2, 1/n) .. (1-1/(n^2-n+2), n/(n^2-n+2)) -- (1-1/(n^2-2n+3), (n-1)/(n^2-2n+3))
  .. (1-1/(n^2-n), (n-1)/(n^2-n)) --;
8 when(n>=16 & 0<=m<=(n-16)/11):
  (1-1/(n^2+n+nm-3m-3), (n+m+1)/(n^2+n+nm-3m-3)) .. (1-1/(n^2+nm+2m+4), (n+m+1)/(n^2+nm+2m+4))
  -- (1-2/(n^2-n+nm+5m+10), (n+m)/(n^2-n+nm+5m+10)) .. (1-2/(n^2+nm-6m-6), (n+m)/(n^2+nm-6m-6)) --;
8 when(n>=8 & (n-15)/11<=m<=(n-8)/5):
  (1-1/(n^2+n+nm-3m-3), (n+m+1)/(n^2+n+nm-3m-3)) .. (1-1/(n^2+nm+2m+4), (n+m+1)/(n^2+nm+2m+4))
  -- #(1-1/(8n+6nm-3m-3), (6m+8)/(8n+6nm-3m-3)) --;
8 when(n>=4 & m==(n-4)/3):
  (1-3/(4n^2-4n+3), (4n-1)/(4n^2-4n+3)) .. (1-3/(4n^2-6n+2), (4n-1)/(4n^2-6n+2))
  -- #(1-2/(2n^2-3n+2), (2n-1)/(2n^2-3n+2)) --;

9 when(n>=4 & m==(n-4)/5):
  (1-5/(6n^2-7n+7), (6n-4)/(6n^2-7n+7)) .. (1-5/(6n^2-2n+2), (6n+1)/(6n^2-2n+2))
  .. (1-5/(6n^2-7n+2), (6n-4)/(6n^2-7n+2)) --;
9 when(n>=7 & (n-3)/5<=m<=(n-4)/3):
  (1-1/(4n+6nm-3m-1), (6m+4)/(4n+6nm-3m-1)) .. (1-1/(5n+6nm-3m-2), (6m+5)/(5n+6nm-3m-2))
  .. (1-1/(4n+6nm-3m-2), (6m+4)/(4n+6nm-3m-2)) -- #(1-1/(3n+6nm-3m-1), (6m+3)/(3n+6nm-3m-1)) --;

10 when(n>=6 & m==(n-6)/5):
  (1-5/(6n^2-9n+8), (6n-6)/(6n^2-9n+8)) -- #(1-5/(6n^2-4n+3), (6n-1)/(6n^2-4n+3))
  -- (1-5/(6n^2-9n+3), (6n-6)/(6n^2-9n+3)) ..;
10 when(n>=5 & (n-5)/5<=m<=(n-5)/3):
  (1-1/(6n+6nm-3m-2), (6m+6)/(6n+6nm-3m-2)) -- #(1-1/(7n+6nm-3m-3), (6m+7)/(7n+6nm-3m-3))
  -- (1-1/(6n+6nm-3m-3), (6m+6)/(6n+6nm-3m-3)) .. (1-1/(5n+6nm-3m-2), (6m+5)/(5n+6nm-3m-2)) ..;

11 when(n>=5 & m==(n-5)/5):
  (1-5/(6n^2-8n+10), (6n-5)/(6n^2-8n+10)) .. (1-5/(6n^2-3n+5), (6n)/(6n^2-3n+5))
  -- (1-5/(6n^2-8n+5), (6n-5)/(6n^2-8n+5)) ..;
11 when(n>=4 & (n-4)/5<=m<=(n-4)/3):
  (1-1/(5n+6nm-3m-1), (6m+5)/(5n+6nm-3m-1)) .. (1-1/(6n+6nm-3m-2), (6m+6)/(6n+6nm-3m-2))
  -- (1-1/(5n+6nm-3m-2), (6m+5)/(5n+6nm-3m-2)) .. (1-1/(4n+6nm-3m-1), (6m+4)/(4n+6nm-3m-1)) ..;

12 when(n>=7 & m==(n-7)/5):
  (1-5/(6n^2-10n+6), (6n-7)/(6n^2-10n+6)) .. (1-5/(6n^2-5n+1), (6n-2)/(6n^2-5n+1))
  .. (1-5/(6n^2-10n+1), (6n-7)/(6n^2-10n+1)) ..;
12 when(n>=6 & (n-6)/5<=m<=(n-6)/3):
  (1-1/(7n+6nm-3m-3), (6m+7)/(7n+6nm-3m-3)) .. (1-1/(8n+6nm-3m-4), (6m+8)/(8n+6nm-3m-4))
  .. (1-1/(7n+6nm-3m-4), (6m+7)/(7n+6nm-3m-4)) .. (1-1/(6n+6nm-3m-3), (6m+6)/(6n+6nm-3m-3)) ..;

13 when(n>=3 & m==(n-3)/5):
  (1-5/(6n^2-6n+9), (6n-3)/(6n^2-6n+9)) .. (1-5/(6n^2-n+4), (6n+2)/(6n^2-n+4))
  .. (1-5/(6n^2-6n+4), (6n-3)/(6n^2-6n+4)) --;
13 when(n>=6 & (n-2)/5<=m<=(n-3)/3):
  (1-1/(3n+6nm-3m), (6m+3)/(3n+6nm-3m)) .. (1-1/(4n+6nm-3m-1), (6m+4)/(4n+6nm-3m-1))
  .. (1-1/(3n+6nm-3m-1), (6m+3)/(3n+6nm-3m-1)) .. (1-1/(2n+6nm-3m), (6m+2)/(2n+6nm-3m)) ..;

14 when(n==2 & m==-1): #(3/4,1/2) -- (4/5,3/5) .. (2/3,2/3) --;
14 when(n>=6 & (n-7)/5<=m<=(n-6)/3):
  #(1-1/(8n+6nm-3m-3), (6m+8)/(8n+6nm-3m-3)) -- (1-1/(9n+6nm-3m-4), (6m+9)/(9n+6nm-3m-4)) --;
14 when(n>=5 & m==(n-5)/3):
  #(1-1/(2n^2-3n+2), (2n-2)/(2n^2-3n+2)) -- ((2n^2-2n)/(2n^2-2n+1), (2n-1)/(2n^2-2n+1))
  .. (1-1/(2n^2-3n+1), (2n-2)/(2n^2-3n+1)) .. (1-1/(2n^2-4n+2), (2n-3)/(2n^2-4n+2)) --;

15 when(n>=6 & (n-7)/5<=m<=(n-6)/3):
  (1-1/(8n+6nm-3m-3), (6m+8)/(8n+6nm-3m-3)) -- (1-1/(7n+6nm-3m-3), (6m+7)/(7n+6nm-3m-3)) --;
15 when(n>=4 & m==(n-4)/3):
  (1,1/n) .. (1-1/(2n^2-2n+1), (2n-1)/(2n^2-2n+1)) -- #(1-1/(2n^2-3n+2), (2n-2)/(2n^2-3n+2)) --;

16 when(n>=7 & (n-4)/5<=m<=(n-4)/3):
  (1-1/(5n+6nm-3m-2), (6m+5)/(5n+6nm-3m-2)) -- (1-1/(4n+6nm-3m-1), (6m+4)/(4n+6nm-3m-1)) --;

17 when(n>=5 & (n-5)/5<=m<=(n-5)/3): #(1-1/(6n+6nm-3m-2), (6m+6)/(6n+6nm-3m-2));

18 when(n>=8 & (n-4)/5<=m<=(n-5)/3): #(1-1/(4n+6nm-3m-2), (6m+4)/(4n+6nm-3m-2));

19 when(n==1 & m==0): #(1/2,3/4) -- (1/2,1) -- #(2/5,4/5) --;
19 when(n>=3 & n%3==0 & m==0):
  (1-1/(2n^2-3n+2), (2n-2)/(2n^2-3n+2)) -- #(1-1/(2n^2-2n+1), (2n-1)/(2n^2-2n+1))
  -- (1-3/(4n^2-6n+3), (4n-3)/(4n^2-6n+3)) .. (1-3/(4n^2-6n+6), (4n-3)/(4n^2-6n+6)) ..;
19 when(n>=9 & n%3==0 & 1<=m<=(2n-6)/9):
  (1-3/(4n^2-4n+9nm+3), (4n+9m-3)/(4n^2-4n+9nm+3)) -- #(1-1/(2n^2-2n+6nm-3m+1), (2n+6m-1)/(2n^2-2n+6nm-3m+1))
  -- (1-3/(4n^2-6n+9nm-9m+3), (4n+9m-3)/(4n^2-6n+9nm-9m+3)) ..;
19 when(n>=4 & n%3==1 & 0<=m<=(2n-8)/9):
  (1-3/(4n^2-2n+9nm+4), (4n+9m-1)/(4n^2-2n+9nm+4)) -- #(1-1/(2n^2+6nm-3m), (2n+6m+1)/(2n^2+6nm-3m))
  -- (1-3/(4n^2-4n+9nm-9m), (4n+9m-1)/(4n^2-4n+9nm-9m)) ..;
19 when(n>=5 & n%3==2 & 0<=m<=(2n-10)/9):
  #(1-3/(4n^2+3n+9nm+2), (4n+9m+4)/(4n^2+3n+9nm+2)) -- #(1-1/(2n^2+2n+6nm-3m-1), (2n+6m+3)/(2n^2+2n+6nm-3m-1))
  -- #(1-3/(4n^2+n+9nm-9m-3), (4n+9m+4)/(4n^2+n+9nm-9m-3)) --;
19 when(n>=6 & m==(2n-3)/9):
  (1-3/(6n^2-7n+3), (6n-6)/(6n^2-7n+3)) -- #(1-3/(10n^2-14n+6), (10n-9)/(10n^2-14n+6))
  -- (1-3/(10n^2-20n+6), (10n-15)/(10n^2-20n+6)) .. (1-2/(4n^2-6n+1), (4n-4)/(4n^2-6n+1)) ..;
19 when(n>=7 & m==(2n-5)/9):
  (1-3/(6n^2-7n+4), (6n-6)/(6n^2-7n+4)) -- #(1-3/(10n^2-15n+8), (10n-10)/(10n^2-15n+8))
  -- (1-1/(2n^2-3n+2), (2n-2)/(2n^2-3n+2)) ..;
19 when(n>=8 & m==(2n-7)/9):
  #(1-3/(6n^2-4n+2), (6n-3)/(6n^2-4n+2)) -- (1-3/(10n^2-10n+4), (10n-5)/(10n^2-10n+4))
  .. (1-1/(2n^2-2n+1), (2n-1)/(2n^2-2n+1)) --;
";

/// Instances always used below the regular sectors, as `(family, n, m)`.
pub(super) const SELECTION_FIXED: [(u8, i64, i64); 4] = [(8, 2, -1), (2, 3, -1), (19, 3, 0), (4, 6, 0)];

pub(super) const SELECTION: &str = "
1 when(n>=2 & -1<=m<=(n-5)/3);
2 when(n>=4 & -1<=m<=(n-7)/3);
3 when(n>=5 & 0<=m<=(n-5)/3);
4 when(n>=7 & 0<=m<=(n-7)/3);
5 when(n>=2 & 0<=m<=(n-2)/3);
6 when(n>=4 & 0<=m<=(n-4)/3);
7 when(n>=5 & 0<=m<=(n-5)/5);
8 when(n>=3 & -1<=m<=(n-8)/5);
9 when(n>=4 & (n-4)/5<=m<=(n-4)/3);
10 when(n>=5 & (n-6)/5<=m<=(n-5)/3);
11 when(n>=4 & (n-5)/5<=m<=(n-4)/3);
12 when(n>=6 & (n-7)/5<=m<=(n-6)/3);
13 when(n>=3 & (n-3)/5<=m<=(n-3)/3);
14 when(n>=6 & (n-7)/5<=m<=(n-6)/3);
15 when(n>=6 & (n-7)/5<=m<=(n-6)/3);
16 when(n>=7 & (n-4)/5<=m<=(n-4)/3);
17 when(n>=5 & (n-5)/5<=m<=(n-5)/3);
18 when(n>=8 & (n-4)/5<=m<=(n-5)/3);
19 when(n>=4 & (1-n%3)/2<=m<=(2n-2(n%3)-5)/9);
";
