upsilon delta 0
upsilon chi 1
lambda chi 2
rho iota 3
gamma delta 4
theta mu 5
sigma rho 6
kappa pi 7
chi delta 8
pi beta 9
lambda tau 10
xi mu 11
rho pi 12
zeta lambda 13
theta eta 14
kappa rho 15
pi gamma 16
tau upsilon 17
pi sigma 18
kappa zeta 19
theta psi 20
sigma xi 21
omega kappa 22
chi lambda 23
eta sigma 24
iota kappa 25
epsilon chi 26
upsilon nu 27
chi omicron 28
sigma beta 29
alpha rho 30
lambda delta 31
eta tau 32
nu delta 33
lambda phi 34
delta mu 35
upsilon omicron 36
epsilon omega 37
kappa epsilon 38
zeta sigma 39
epsilon eta 40
delta beta 41
kappa phi 42
eta pi 43
phi lambda 44
omicron theta 45
phi upsilon 46
zeta xi 47
psi sigma 48
sigma sigma 49
beta rho 50
xi gamma 51
mu epsilon 52
nu upsilon 53
psi chi 54
beta omicron 55
tau pi 56
gamma alpha 57
alpha phi 58
