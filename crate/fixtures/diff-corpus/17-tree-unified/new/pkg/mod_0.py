theta psi 0
zeta omega 5
inserted eta 0.316677
inserted iota 0.877272
lambda mu 6
omicron nu 7
lambda phi 8
chi epsilon 9
beta nu 11
sigma rho 12
sigma beta 13
kappa mu 14
phi lambda 15
sigma pi 16
iota mu 17
omicron iota 18
epsilon kappa 19
nu rho 20
chi tau 21
tau omega 22
