psi kappa 0
beta chi 1
eta epsilon 2
gamma tau 3
rho kappa 4
tau kappa 5
kappa alpha 6
omicron zeta 7
gamma epsilon 8
nu iota 9
omega mu 10
iota chi 11
nu zeta 12
beta psi 13
omega omega 14
omicron eta 15
alpha tau 16
epsilon rho 17
upsilon eta 18
chi pi 19
eta upsilon 20
lambda upsilon 21
delta eta 22
omega nu 23
sigma zeta 24
omicron epsilon 25
epsilon lambda 26
phi beta 27
alpha gamma 28
rho omega 29
nu sigma 30
mu lambda 31
epsilon nu 32
iota alpha 33
delta psi 34
lambda rho 35
eta gamma 36
mu omicron 37
pi mu 38
kappa epsilon 39
beta lambda 40
beta upsilon 41
omicron chi 42
