_base_ = ['../_base_/default_runtime.py']
figure = dict(
    type='CollinearRateScans',
    x12_values=[0.05, 0.1, 0.2, 0.5],
    eta=1.5707963267948966,
    x23_min=0.01,
    x23_max=1.0,
    points=100,
    solver='analytic')
