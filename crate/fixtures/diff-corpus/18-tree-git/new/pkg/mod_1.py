theta kappa 0
delta lambda 1
nu epsilon 2
delta kappa 3
lambda tau 4
beta iota 5
phi psi 6
alpha psi 7
alpha phi 8
chi tau 9
rho epsilon 10
sigma nu 11
sigma iota 12
xi psi 13
sigma iota 14
rho theta 15
tau phi 16
pi tau 17
alpha mu 18
upsilon pi 19
chi pi 20
nu nu 21
beta phi 22
nu kappa 23
psi nu 24
tau gamma 25
phi sigma 26
pi lambda 27
sigma epsilon 28
upsilon nu 29
mu xi 30
theta sigma 31
kappa pi 32
rho mu 33
eta mu 34
sigma epsilon 35
epsilon omega 36
omega beta 37
rho omicron 38
zeta zeta 39
phi nu 40
rho rho 41
xi eta 42
gamma theta 43
theta zeta 44
alpha upsilon 45
beta theta 46
