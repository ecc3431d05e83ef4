log_level = 'INFO'
work_dir = None
# worker processes for the rate scans
nproc = 1
show_progress = True
